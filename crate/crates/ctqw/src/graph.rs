//! Network families and their connectivity (Laplacian) matrices.
//!
//! Nodes are 1-based in all public I/O. Every constructor produces a
//! deterministic node ordering so downstream output files are
//! byte-reproducible.

use std::collections::VecDeque;
use std::io::BufRead;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Which family a [`Network`] was generated from, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Ring,
    Star,
    ArmStar { arms: usize, arm_length: usize },
    Dendrimer { generations: usize },
    Custom,
}

impl Family {
    pub fn label(&self) -> String {
        match self {
            Family::Ring => "ring".into(),
            Family::Star => "star".into(),
            Family::ArmStar { arms, arm_length } => {
                format!("arm_star(arms={arms},arm_length={arm_length})")
            }
            Family::Dendrimer { generations } => format!("dendrimer(G={generations})"),
            Family::Custom => "custom".into(),
        }
    }
}

/// An undirected, connected graph: the walk substrate.
///
/// Edges are stored as `(i, j)` with `1 <= i < j <= n`, sorted, without
/// duplicates or self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    n_nodes: usize,
    edges: Vec<(usize, usize)>,
    family: Family,
}

impl Network {
    /// Build from an explicit edge list. Validates index range, self-loops,
    /// duplicates, and connectivity.
    pub fn from_edges(n_nodes: usize, edges: Vec<(usize, usize)>, family: Family) -> Result<Self> {
        if n_nodes == 0 {
            return Err(Error::InvalidParameter("network must have at least one node".into()));
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at node {a}")));
            }
            if a < 1 || a > n_nodes || b < 1 || b > n_nodes {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a},{b}) out of range 1..={n_nodes}"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let net = Network { n_nodes, edges: norm, family };
        net.check_connected()?;
        Ok(net)
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Number of bonds f_i at every node, 1-based node i at index i-1.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n_nodes];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg
    }

    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_nodes];
        for &(a, b) in &self.edges {
            adj[a - 1].push(b - 1);
            adj[b - 1].push(a - 1);
        }
        adj
    }

    /// Breadth-first reachability from node 1.
    fn check_connected(&self) -> Result<()> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n_nodes];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0usize);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        match seen.iter().position(|&s| !s) {
            None => Ok(()),
            Some(idx) => Err(Error::Disconnected { node: idx + 1 }),
        }
    }
}

/// The connectivity matrix A = H: node degrees on the diagonal, -1 per bond,
/// with the transmission rate set to one.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianMatrix {
    matrix: DMatrix<f64>,
}

impl HamiltonianMatrix {
    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }
}

/// Cycle graph on `n` nodes in cyclic order.
pub fn build_ring(n: usize) -> Result<Network> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("ring needs n >= 3, got {n}")));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    Network::from_edges(n, edges, Family::Ring)
}

/// Star: node 1 is the core, nodes 2..=n hang off it.
pub fn build_star(n: usize) -> Result<Network> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("star needs n >= 3, got {n}")));
    }
    let edges = (2..=n).map(|i| (1, i)).collect();
    Network::from_edges(n, edges, Family::Star)
}

/// Star with `arms` path-shaped arms of `arm_length` nodes each. Node 1 is the
/// core; arm a (0-based) occupies nodes 2 + a*arm_length .. inner before outer.
pub fn build_arm_star(arms: usize, arm_length: usize) -> Result<Network> {
    if arms < 2 {
        return Err(Error::InvalidParameter(format!("arm star needs arms >= 2, got {arms}")));
    }
    if arm_length < 1 {
        return Err(Error::InvalidParameter(format!(
            "arm star needs arm_length >= 1, got {arm_length}"
        )));
    }
    let n = arms * arm_length + 1;
    let mut edges = Vec::with_capacity(n - 1);
    for a in 0..arms {
        let first = 2 + a * arm_length;
        edges.push((1, first));
        for k in 1..arm_length {
            edges.push((first + k - 1, first + k));
        }
    }
    Network::from_edges(n, edges, Family::ArmStar { arms, arm_length })
}

/// Functionality-3 dendrimer of `generations` generations, nodes numbered
/// breadth-first from the core. N = 3 * 2^G - 2.
pub fn build_dendrimer(generations: usize) -> Result<Network> {
    if generations < 1 {
        return Err(Error::InvalidParameter(format!(
            "dendrimer needs generations >= 1, got {generations}"
        )));
    }
    if generations > 20 {
        return Err(Error::InvalidParameter(format!(
            "dendrimer of {generations} generations is too large"
        )));
    }
    let n = 3 * (1usize << generations) - 2;
    let mut edges = Vec::with_capacity(n - 1);
    // core -> generation 1
    edges.push((1, 2));
    edges.push((1, 3));
    edges.push((1, 4));
    let mut gen_start = 2usize; // first node of the current generation
    let mut gen_size = 3usize;
    let mut next = 5usize; // first node of the next generation
    for _ in 1..generations {
        for parent in gen_start..gen_start + gen_size {
            edges.push((parent, next));
            edges.push((parent, next + 1));
            next += 2;
        }
        gen_start += gen_size;
        gen_size *= 2;
    }
    debug_assert_eq!(next - 1, n);
    Network::from_edges(n, edges, Family::Dendrimer { generations })
}

/// Parse the edge-list text format: first line N, then "i j" lines with
/// 1 <= i < j <= N; '#' lines and blank lines ignored.
pub fn load_adjacency<R: BufRead>(reader: R) -> Result<Network> {
    let mut n_nodes: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if n_nodes.is_none() {
            let n = trimmed.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("expected node count, got {trimmed:?}"),
            })?;
            n_nodes = Some(n);
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected \"i j\", got {trimmed:?}"),
                })
            }
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad node index {s:?}"),
            })
        };
        let (i, j) = (parse(a)?, parse(b)?);
        if i >= j {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("edge must satisfy i < j, got {i} {j}"),
            });
        }
        edges.push((i, j));
    }
    let n = n_nodes.ok_or_else(|| Error::Parse { line: 0, msg: "empty edge list".into() })?;
    Network::from_edges(n, edges, Family::Custom)
}

/// Serialize a network in the same edge-list format `load_adjacency` reads.
pub fn write_edge_list(net: &Network) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", net.n_nodes()));
    for &(a, b) in net.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// The connectivity matrix of the network.
pub fn hamiltonian(net: &Network) -> HamiltonianMatrix {
    let n = net.n_nodes();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for &(a, b) in net.edges() {
        m[(a - 1, b - 1)] = -1.0;
        m[(b - 1, a - 1)] = -1.0;
        m[(a - 1, a - 1)] += 1.0;
        m[(b - 1, b - 1)] += 1.0;
    }
    HamiltonianMatrix { matrix: m }
}
