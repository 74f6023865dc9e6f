//! Simple undirected graphs and the domination predicates built on them.
//!
//! Vertices are dense `0..n` ids. A [`Graph`] is immutable once built; every
//! constructor deduplicates edges and rejects self-loops, so adjacency lists
//! are always sorted, duplicate-free and symmetric.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Ok(Self {
            adjacency,
            m: degree_sum / 2,
        })
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.max_degree();
        (self.min_degree() == d).then_some(d)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.members().last() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// N[v], sorted.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_sorted_unchecked(self.closed_neighbors(v)))
    }

    pub(crate) fn closed_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let list = &self.adjacency[v];
        let split = list.partition_point(|&w| w < v);
        let mut out = Vec::with_capacity(list.len() + 1);
        out.extend_from_slice(&list[..split]);
        out.push(v);
        out.extend_from_slice(&list[split..]);
        out
    }

    /// Number of members of `s` inside N[w].
    fn hits(&self, s: &VertexSet, w: Vertex) -> usize {
        usize::from(s.contains(w)) + self.adjacency[w].iter().filter(|&&u| s.contains(u)).count()
    }

    pub fn is_dominating(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok((0..self.n()).all(|w| self.hits(s, w) > 0))
    }

    /// Vertices `w` in N[v] whose closed neighborhood meets `s` only in `v`.
    pub fn private_neighbors(&self, s: &VertexSet, v: Vertex) -> Result<VertexSet> {
        self.check_set(s)?;
        self.check_vertex(v)?;
        if !s.contains(v) {
            return Err(Error::NotInSet(v));
        }
        let private = self
            .closed_neighbors(v)
            .into_iter()
            .filter(|&w| self.hits(s, w) == 1)
            .collect();
        Ok(VertexSet::from_sorted_unchecked(private))
    }

    /// Dominating, and every member keeps at least one private neighbor.
    pub fn is_minimal_dominating(&self, s: &VertexSet) -> Result<bool> {
        if !self.is_dominating(s)? {
            return Ok(false);
        }
        for &v in s.members() {
            if self.private_neighbors(s, v)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Text form: header `n m`, then one `u v` line per edge with `u < v`,
    /// sorted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n(), self.m).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            let (u, v) = parse_pair(line, body)?;
            if u >= v {
                return Err(Error::Parse {
                    line,
                    message: format!("edge `{u} {v}` must satisfy u < v"),
                });
            }
            if v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {v} out of range for n = {n}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: header_line,
                message: format!("header declares {m} edges but {} were read", edges.len()),
            });
        }
        let g = Self::from_edges(n, edges).map_err(|e| Error::Parse {
            line: header_line,
            message: e.to_string(),
        })?;
        if g.m() != m {
            return Err(Error::Parse {
                line: header_line,
                message: "duplicate edges".into(),
            });
        }
        Ok(g)
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let bad = |message: String| Error::Parse { line, message };
    let mut parts = body.split_ascii_whitespace();
    let mut next = || -> Result<usize> {
        let tok = parts
            .next()
            .ok_or_else(|| bad(format!("expected two integers, got `{body}`")))?;
        tok.parse()
            .map_err(|_| bad(format!("`{tok}` is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if parts.next().is_some() {
        return Err(bad(format!("expected two integers, got `{body}`")));
    }
    Ok((a, b))
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self(members)
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    /// Members of a bitmask, low bit = vertex 0.
    pub fn from_mask(mask: u64) -> Self {
        Self((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn members(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
