//! Population networks: generators and the metrics correlated with search
//! performance.
//!
//! Node `i` of a [`PopulationGraph`] is population slot `i`. Graphs are simple
//! and undirected, and are immutable once built.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// Network family and its parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Topology {
    /// Each pair linked independently with probability `p`.
    ErdosRenyi(f64),
    /// Preferential attachment with `m` edges per arriving node.
    BarabasiAlbert(usize),
    Complete,
    Empty,
    /// Hub is node 0.
    Star,
}

impl Topology {
    /// Checks the parameter against a population of `n` nodes.
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            Topology::ErdosRenyi(p) if !(0.0..=1.0).contains(&p) => {
                Err(Error::InvalidTopology(format!("ER link probability {p} outside [0, 1]")))
            }
            Topology::BarabasiAlbert(m) if m == 0 || m >= n => Err(Error::InvalidTopology(format!(
                "BA attachment m = {m} must lie in [1, n - 1] for n = {n}"
            ))),
            _ if n == 0 => Err(Error::InvalidTopology("graph needs at least one node".into())),
            _ => Ok(()),
        }
    }

    /// Whether generation consumes randomness.
    pub fn is_random(&self) -> bool {
        matches!(self, Topology::ErdosRenyi(_) | Topology::BarabasiAlbert(_))
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Topology::ErdosRenyi(p) => write!(f, "er:{p}"),
            Topology::BarabasiAlbert(m) => write!(f, "ba:{m}"),
            Topology::Complete => f.write_str("complete"),
            Topology::Empty => f.write_str("empty"),
            Topology::Star => f.write_str("star"),
        }
    }
}

impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let bad = |what: &str| Error::Parse(format!("bad topology '{s}': {what}"));
        match s.split_once(':') {
            Some(("er", p)) => {
                let p: f64 = p.parse().map_err(|_| bad("ER parameter must be a real"))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad("ER parameter must lie in [0, 1]"));
                }
                Ok(Topology::ErdosRenyi(p))
            }
            Some(("ba", m)) => {
                let m: usize = m.parse().map_err(|_| bad("BA parameter must be a positive integer"))?;
                if m == 0 {
                    return Err(bad("BA parameter must be at least 1"));
                }
                Ok(Topology::BarabasiAlbert(m))
            }
            None if s == "complete" => Ok(Topology::Complete),
            None if s == "empty" => Ok(Topology::Empty),
            None if s == "star" => Ok(Topology::Star),
            _ => Err(bad("expected er:<p>, ba:<m>, complete, empty or star")),
        }
    }
}

/// Undirected simple graph over population slots `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopulationGraph {
    adjacency: Vec<Vec<usize>>,
    edges: usize,
}

impl PopulationGraph {
    pub fn empty(n: usize) -> Self {
        Self { adjacency: vec![Vec::new(); n], edges: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n).map(|i| (0..n).filter(|&j| j != i).collect()).collect();
        Self { adjacency, edges: n * n.saturating_sub(1) / 2 }
    }

    pub fn star(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|leaf| (0, leaf))).expect("star edges are valid")
    }

    /// Builds a graph from unordered pairs. Self-loops, out-of-range nodes and
    /// duplicate pairs are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            for node in [a, b] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            if a == b {
                return Err(Error::InvalidTopology(format!("self-loop on node {a}")));
            }
            if g.adjacency[a].contains(&b) {
                return Err(Error::InvalidTopology(format!("duplicate edge {a}-{b}")));
            }
            g.adjacency[a].push(b);
            g.adjacency[b].push(a);
            g.edges += 1;
        }
        for list in &mut g.adjacency {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency.get(a).is_some_and(|l| l.binary_search(&b).is_ok())
    }

    pub fn degree(&self, k: usize) -> usize {
        self.adjacency[k].len()
    }

    /// The nodes linked to `k`, ascending.
    pub fn neighbors(&self, k: usize) -> Result<&[usize]> {
        self.adjacency
            .get(k)
            .map(Vec::as_slice)
            .ok_or(Error::NodeOutOfRange { node: k, n: self.node_count() })
    }

    /// All edges as `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Realised links over possible links, `2|E| / (n(n-1))`.
    pub fn density(&self) -> Result<f64> {
        let n = self.node_count();
        if n < 2 {
            return Err(Error::TooFewNodes(n));
        }
        Ok(2.0 * self.edges as f64 / (n * (n - 1)) as f64)
    }

    /// Hop distances from `source` by breadth-first search; `None` if unreachable.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        match self.node_count() {
            0 => false,
            _ => self.distances_from(0).iter().all(Option::is_some),
        }
    }

    /// Mean hop distance over unordered pairs that are joined by a path.
    pub fn average_shortest_path_length(&self) -> PathLength {
        let n = self.node_count();
        let mut total = 0u64;
        let mut pairs = 0u64;
        let mut disconnected = false;
        for source in 0..n {
            for d in self.distances_from(source).into_iter().skip(source + 1) {
                match d {
                    Some(d) => {
                        total += d as u64;
                        pairs += 1;
                    }
                    None => disconnected = true,
                }
            }
        }
        match (pairs, disconnected) {
            (0, _) => PathLength::Undefined,
            (_, false) => PathLength::Connected(total as f64 / pairs as f64),
            (_, true) => PathLength::Partial(total as f64 / pairs as f64),
        }
    }

    /// Edge-list text: `n <count>` then one `i j` line per edge, `i < j`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.node_count());
        for (i, j) in self.edges() {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let n = header
            .strip_prefix("n ")
            .and_then(|c| c.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge-list header '{header}'")))?;
        let edges = lines
            .map(|l| {
                let mut it = l.split_whitespace().map(str::parse::<usize>);
                match (it.next(), it.next(), it.next()) {
                    (Some(Ok(i)), Some(Ok(j)), None) => Ok((i, j)),
                    _ => Err(Error::Parse(format!("bad edge line '{l}'"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(n, edges)
    }
}

/// Average shortest path length, tagged by how much of the graph it covers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PathLength {
    /// Every pair is joined by a path.
    Connected(f64),
    /// Graph is disconnected; value averages the within-component pairs only.
    Partial(f64),
    /// No pair is joined by a path.
    Undefined,
}

impl PathLength {
    pub fn value(&self) -> Option<f64> {
        match *self {
            PathLength::Connected(v) | PathLength::Partial(v) => Some(v),
            PathLength::Undefined => None,
        }
    }

    pub fn is_partial(&self) -> bool {
        matches!(self, PathLength::Partial(_))
    }
}

/// Link probability above which `G(n, p)` is connected with high probability: `ln(n) / n`.
pub fn er_connectivity_threshold(n: usize) -> f64 {
    let n = n as f64;
    n.ln() / n
}

/// Draws a network of `n` nodes.
pub fn generate<R: Rng + ?Sized>(topology: Topology, n: usize, rng: &mut R) -> Result<PopulationGraph> {
    topology.validate(n)?;
    Ok(match topology {
        Topology::ErdosRenyi(p) => erdos_renyi(n, p, rng),
        Topology::BarabasiAlbert(m) => barabasi_albert(n, m, rng),
        Topology::Complete => PopulationGraph::complete(n),
        Topology::Empty => PopulationGraph::empty(n),
        Topology::Star => PopulationGraph::star(n),
    })
}

// Pairs are visited in lexicographic order, one uniform draw each, so the
// seed alone fixes the graph.
fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> PopulationGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    PopulationGraph::from_edges(n, edges).expect("lexicographic pairs are distinct")
}

// Seed: star on nodes 0..=m with node m as centre. Every later node draws m
// distinct targets with probability proportional to current degree, redrawing
// duplicates. Edge count is m + m(n - m - 1).
fn barabasi_albert<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> PopulationGraph {
    let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, m)).collect();
    // Each node appears once per incident edge end.
    let mut ends: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut targets = Vec::with_capacity(m);
    for node in (m + 1)..n {
        targets.clear();
        while targets.len() < m {
            let t = ends[rng.random_range(0..ends.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, node));
            ends.push(t);
            ends.push(node);
        }
    }
    PopulationGraph::from_edges(n, edges).expect("targets are distinct existing nodes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeding::{stream, StreamId};

    fn rng(seed: u64) -> crate::seeding::RandomStream {
        stream(seed, StreamId::Graph)
    }

    #[test]
    fn er_extremes() {
        assert_eq!(generate(Topology::ErdosRenyi(0.0), 50, &mut rng(1)).unwrap().edge_count(), 0);
        let full = generate(Topology::ErdosRenyi(1.0), 50, &mut rng(1)).unwrap();
        assert_eq!(full.edge_count(), 1225);
        assert_eq!(full, PopulationGraph::complete(50));
    }

    #[test]
    fn er_half_edge_count_within_binomial_band() {
        // Binomial(1225, 0.5): mean 612.5, sd 17.5; 5 sd band is [525, 700] and
        // sits inside the coarser [460, 765] band.
        for seed in 0..50 {
            let e = generate(Topology::ErdosRenyi(0.5), 50, &mut rng(seed)).unwrap().edge_count();
            assert!((460..=765).contains(&e), "seed {seed}: {e} edges");
        }
    }

    #[test]
    fn ba_tree_at_m1() {
        let g = generate(Topology::BarabasiAlbert(1), 50, &mut rng(3)).unwrap();
        assert_eq!(g.edge_count(), 49);
        assert!(g.is_connected());
    }

    #[test]
    fn ba_edge_counts() {
        for m in [1usize, 5, 10, 25, 49] {
            for seed in 0..20 {
                let g = generate(Topology::BarabasiAlbert(m), 50, &mut rng(seed)).unwrap();
                assert_eq!(g.edge_count(), m * (50 - m - 1) + m);
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn ba_rejects_bad_m() {
        assert!(generate(Topology::BarabasiAlbert(50), 50, &mut rng(0)).is_err());
        assert!(generate(Topology::BarabasiAlbert(0), 50, &mut rng(0)).is_err());
        assert!(generate(Topology::ErdosRenyi(1.5), 50, &mut rng(0)).is_err());
    }

    #[test]
    fn generation_is_deterministic() {
        for t in [Topology::ErdosRenyi(0.3), Topology::BarabasiAlbert(4)] {
            let a = generate(t, 50, &mut rng(11)).unwrap();
            let b = generate(t, 50, &mut rng(11)).unwrap();
            assert_eq!(a.to_edge_list(), b.to_edge_list());
        }
    }

    #[test]
    fn star_neighbourhoods() {
        let g = PopulationGraph::star(5);
        assert_eq!(g.neighbors(0).unwrap(), &[1, 2, 3, 4]);
        assert_eq!(g.neighbors(3).unwrap(), &[0]);
        assert!(PopulationGraph::empty(5).neighbors(2).unwrap().is_empty());
        assert_eq!(g.neighbors(5), Err(Error::NodeOutOfRange { node: 5, n: 5 }));
    }

    #[test]
    fn densities() {
        assert_eq!(PopulationGraph::complete(50).density().unwrap(), 1.0);
        assert_eq!(PopulationGraph::empty(50).density().unwrap(), 0.0);
        assert_eq!(PopulationGraph::star(50).density().unwrap(), 49.0 / 1225.0);
        assert_eq!(PopulationGraph::empty(1).density(), Err(Error::TooFewNodes(1)));
        for n in 2..20 {
            assert_eq!(PopulationGraph::complete(n).density().unwrap(), 1.0);
            assert_eq!(PopulationGraph::empty(n).density().unwrap(), 0.0);
        }
    }

    #[test]
    fn connectivity() {
        assert!(PopulationGraph::star(50).is_connected());
        assert!(!PopulationGraph::empty(2).is_connected());
        assert!(PopulationGraph::empty(1).is_connected());
    }

    #[test]
    fn path_lengths() {
        assert_eq!(PopulationGraph::complete(50).average_shortest_path_length(), PathLength::Connected(1.0));
        assert_eq!(
            PopulationGraph::star(50).average_shortest_path_length(),
            PathLength::Connected(2401.0 / 1225.0)
        );
        assert_eq!(PopulationGraph::empty(50).average_shortest_path_length(), PathLength::Undefined);
        // two disjoint edges plus an isolated node
        let g = PopulationGraph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.average_shortest_path_length(), PathLength::Partial(1.0));
    }

    #[test]
    fn threshold() {
        assert!((er_connectivity_threshold(50) - 0.078_240_460_108_562_92).abs() < 1e-15);
        assert!((er_connectivity_threshold(3) - 3f64.ln() / 3.0).abs() < 1e-15);
        assert!((er_connectivity_threshold(2) - 0.346_573_590_279_972_6).abs() < 1e-15);
    }

    #[test]
    fn topology_strings() {
        for (s, t) in [
            ("er:0.25", Topology::ErdosRenyi(0.25)),
            ("ba:10", Topology::BarabasiAlbert(10)),
            ("complete", Topology::Complete),
            ("empty", Topology::Empty),
            ("star", Topology::Star),
        ] {
            assert_eq!(s.parse::<Topology>().unwrap(), t);
            assert_eq!(t.to_string(), s);
        }
        for bad in ["er:2", "er:x", "ba:0", "ba:-1", "ring", "er"] {
            assert!(bad.parse::<Topology>().is_err(), "{bad}");
        }
    }

    #[test]
    fn edge_list_format() {
        let g = PopulationGraph::star(4);
        assert_eq!(g.to_edge_list(), "n 4\n0 1\n0 2\n0 3\n");
        assert_eq!(PopulationGraph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        assert!(PopulationGraph::from_edge_list("n 3\n0 0\n").is_err());
        assert!(PopulationGraph::from_edge_list("n 3\n0 1\n1 0\n").is_err());
        assert!(PopulationGraph::from_edge_list("3\n").is_err());
    }
}
