//! Simple undirected graphs and the operations used to compose the
//! constructions: Cayley graphs, cycles, `K_2`, Cartesian products,
//! complements and circulants.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GeneratorSet};

/// A simple undirected graph on vertices `0..n`.
///
/// Equality compares structure only; the provenance tag is ignored.
#[derive(Debug, Clone, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    provenance: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: alloc::vec![Vec::new(); n],
            provenance: None,
        }
    }

    /// Builds a graph from an edge list. Self-loops are rejected and repeated
    /// edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = alloc::vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange {
                    index: u.max(v),
                    len: n,
                });
            }
            if u == v {
                return Err(Error::InvalidGenerators(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adjacency,
            provenance: None,
        })
    }

    /// Wraps sorted neighbor lists produced by an operation in this module.
    fn from_sorted(adjacency: Vec<Vec<usize>>, provenance: String) -> Self {
        let g = Graph {
            adjacency,
            provenance: Some(provenance),
        };
        debug_assert!(g.check_invariants());
        g
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = Some(provenance.into());
        self
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Returns `Some(k)` if every vertex has degree `k`. The null graph has no degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|l| l.len() == first)
            .then_some(first)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    /// No self-loops, symmetric, neighbor lists strictly ascending.
    pub fn check_invariants(&self) -> bool {
        let n = self.order();
        self.adjacency.iter().enumerate().all(|(v, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&u| u < n && u != v && self.has_edge(u, v))
        })
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}", self.order(), self.edge_count())?;
        if let Some(p) = &self.provenance {
            write!(f, ", {p}")?;
        }
        f.write_str(")")
    }
}

/// Half of a circulant connection set: steps `s` with `1 ≤ s ≤ ⌊n/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectionSet {
    order: usize,
    steps: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(order: usize, steps: impl IntoIterator<Item = usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidOrder { order, minimum: 1 });
        }
        let mut steps: Vec<usize> = steps.into_iter().collect();
        steps.sort_unstable();
        steps.dedup();
        if let Some(&bad) = steps.iter().find(|&&s| s == 0 || s > order / 2) {
            return Err(Error::InvalidConnectionSet(format!(
                "step {bad} outside [1, {}] for order {order}",
                order / 2
            )));
        }
        Ok(ConnectionSet { order, steps })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    /// True when `n` is even and `n/2` is a step; that step contributes one
    /// neighbor instead of two.
    pub fn has_half_step(&self) -> bool {
        self.order.is_multiple_of(2) && self.steps.last() == Some(&(self.order / 2))
    }

    pub fn degree(&self) -> usize {
        let half = usize::from(self.has_half_step());
        2 * (self.steps.len() - half) + half
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// Cayley graph: vertices are group elements, `g ~ g·x` for `x` in `generators`.
pub fn cayley_graph(group: &FiniteGroup, generators: &GeneratorSet) -> Result<Graph> {
    // Re-validate: the set may have been built against a different group.
    let generators = GeneratorSet::new(group, generators.elements().iter().copied())?;
    let adjacency = (0..group.order())
        .map(|g| {
            let mut list: Vec<usize> = generators
                .elements()
                .iter()
                .map(|&x| group.mul(g, x))
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    let labels: Vec<&str> = generators
        .elements()
        .iter()
        .map(|&x| group.label(x))
        .collect();
    Ok(Graph::from_sorted(
        adjacency,
        format!("cayley({}, {{{}}})", group.name(), labels.join(", ")),
    ))
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidOrder {
            order: n,
            minimum: 3,
        });
    }
    let adjacency = (0..n)
        .map(|v| {
            let mut list = alloc::vec![(v + 1) % n, (v + n - 1) % n];
            list.sort_unstable();
            list
        })
        .collect();
    Ok(Graph::from_sorted(adjacency, format!("C{n}")))
}

pub fn k2() -> Graph {
    Graph::from_sorted(
        alloc::vec![alloc::vec![1], alloc::vec![0]],
        String::from("K2"),
    )
}

fn tag(g: &Graph) -> &str {
    g.provenance().unwrap_or("G")
}

/// Cartesian product `a □ b` with vertex `(u, v)` at index `u·|b| + v`.
pub fn cartesian_product(a: &Graph, b: &Graph) -> Graph {
    let nb = b.order();
    let adjacency = (0..a.order() * nb)
        .map(|x| {
            let (u, v) = (x / nb, x % nb);
            let mut list: Vec<usize> = a
                .neighbors(u)
                .iter()
                .map(|&u2| u2 * nb + v)
                .chain(b.neighbors(v).iter().map(|&v2| u * nb + v2))
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    Graph::from_sorted(adjacency, format!("cartesian({},{})", tag(a), tag(b)))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let adjacency = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && !g.has_edge(u, v)).collect())
        .collect();
    Graph::from_sorted(adjacency, format!("complement({})", tag(g)))
}

/// `i ~ j` iff `±(i − j) mod n` is a step.
pub fn circulant_graph(cs: &ConnectionSet) -> Graph {
    let n = cs.order();
    let adjacency = (0..n)
        .map(|i| {
            let mut list: Vec<usize> = cs
                .steps()
                .iter()
                .flat_map(|&s| [(i + s) % n, (i + n - s) % n])
                .collect();
            list.sort_unstable();
            list.dedup();
            list
        })
        .collect();
    Graph::from_sorted(adjacency, format!("circulant({n}, {cs})"))
}
