//! Reproducible graph families.
//!
//! Each [`InstanceSpec`] names a family, its integer parameters and (for the
//! random family) a seed. Vertex id layouts:
//!
//! * board families (`queen2xk`, `rook2xk`, `rookkxk`, `bishopkxk`,
//!   `knightkxk`): one vertex per square, `id = row * cols + col`;
//! * `gen_petersen` P(n,k): `u_i = i`, `v_i = n + i`;
//! * `flower_snark` J_k: `A_i = i`, `B_i = k + i`, `C_i = 2k + i`, `D_i = 3k + i`;
//! * `complete_bipartite` K_{m,n}: the `m` side first, then the `n` side;
//! * `cycle` / `path`: consecutive ids along the walk.
//!
//! The textual form is `family:p1,p2[,seed=S]`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Complete,
    CompleteBipartite,
    Queen2xK,
    Rook2xK,
    RookKxK,
    BishopKxK,
    KnightKxK,
    FlowerSnark,
    GenPetersen,
    ErdosRenyi,
    Cycle,
    Path,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Complete,
        Family::CompleteBipartite,
        Family::Queen2xK,
        Family::Rook2xK,
        Family::RookKxK,
        Family::BishopKxK,
        Family::KnightKxK,
        Family::FlowerSnark,
        Family::GenPetersen,
        Family::ErdosRenyi,
        Family::Cycle,
        Family::Path,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Queen2xK => "queen2xk",
            Family::Rook2xK => "rook2xk",
            Family::RookKxK => "rookkxk",
            Family::BishopKxK => "bishopkxk",
            Family::KnightKxK => "knightkxk",
            Family::FlowerSnark => "flower_snark",
            Family::GenPetersen => "gen_petersen",
            Family::ErdosRenyi => "erdos_renyi",
            Family::Cycle => "cycle",
            Family::Path => "path",
        }
    }

    pub fn is_random(self) -> bool {
        self == Family::ErdosRenyi
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::InvalidInstance(format!(
                    "unknown family `{s}` (expected one of {})",
                    known.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InstanceSpec {
    pub family: Family,
    pub params: Vec<usize>,
    /// Only consulted by random families; `None` means seed 0.
    pub seed: Option<u64>,
}

impl InstanceSpec {
    pub fn new(family: Family, params: impl Into<Vec<usize>>) -> Self {
        Self {
            family,
            params: params.into(),
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::InvalidInstance(format!("{self}: {}", msg.into())))
    }

    fn arity(&self, allowed: &[usize]) -> Result<()> {
        if allowed.contains(&self.params.len()) {
            Ok(())
        } else {
            let want: Vec<String> = allowed.iter().map(usize::to_string).collect();
            self.fail(format!(
                "expected {} parameter(s), got {}",
                want.join(" or "),
                self.params.len()
            ))
        }
    }

    fn at_least(&self, name: &str, value: usize, min: usize) -> Result<()> {
        if value >= min {
            Ok(())
        } else {
            self.fail(format!("{name} = {value} violates {name} >= {min}"))
        }
    }

    /// Board dimensions for the two-row families: `[k]` means 2 x k, while
    /// `[rows, cols]` needs one side equal to 2.
    fn two_row_dims(&self) -> Result<(usize, usize)> {
        self.arity(&[1, 2])?;
        let (rows, cols) = match self.params[..] {
            [k] => (2, k),
            [r, c] => (r, c),
            _ => unreachable!(),
        };
        if rows != 2 && cols != 2 {
            return self.fail(format!("board {rows}x{cols} has no side of length 2"));
        }
        self.at_least("k", rows.min(cols), 1)?;
        Ok((rows, cols))
    }

    /// Checks the family's parameter bounds.
    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        match self.family {
            Family::Complete => {
                self.arity(&[1])?;
                self.at_least("n", p[0], 1)
            }
            Family::CompleteBipartite => {
                self.arity(&[2])?;
                self.at_least("m", p[0], 1)?;
                self.at_least("n", p[1], 1)
            }
            Family::Queen2xK | Family::Rook2xK => self.two_row_dims().map(|_| ()),
            Family::RookKxK => {
                self.arity(&[1])?;
                self.at_least("k", p[0], 1)
            }
            Family::BishopKxK => {
                self.arity(&[1])?;
                self.at_least("k", p[0], 2)
            }
            Family::KnightKxK => {
                self.arity(&[1])?;
                self.at_least("k", p[0], 3)
            }
            Family::FlowerSnark => {
                self.arity(&[1])?;
                self.at_least("k", p[0], 3)
            }
            Family::GenPetersen => {
                self.arity(&[2])?;
                let (n, k) = (p[0], p[1]);
                self.at_least("n", n, 3)?;
                self.at_least("k", k, 1)?;
                if 2 * k >= n {
                    return self.fail(format!("k = {k} violates k < n/2 with n = {n}"));
                }
                Ok(())
            }
            Family::ErdosRenyi => {
                self.arity(&[2])?;
                let (n, d) = (p[0], p[1]);
                self.at_least("n", n, 1)?;
                if d > n {
                    return self.fail(format!("d = {d} violates d <= n with n = {n}"));
                }
                Ok(())
            }
            Family::Cycle => {
                self.arity(&[1])?;
                self.at_least("n", p[0], 3)
            }
            Family::Path => {
                self.arity(&[1])?;
                self.at_least("n", p[0], 1)
            }
        }
    }

    /// Builds the graph. Deterministic in `(family, params, seed)`.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let p = &self.params;
        match self.family {
            Family::Complete => complete(p[0]),
            Family::CompleteBipartite => complete_bipartite(p[0], p[1]),
            Family::Queen2xK => {
                let (r, c) = self.two_row_dims()?;
                board(r, c, queen_attacks)
            }
            Family::Rook2xK => {
                let (r, c) = self.two_row_dims()?;
                board(r, c, rook_attacks)
            }
            Family::RookKxK => board(p[0], p[0], rook_attacks),
            Family::BishopKxK => board(p[0], p[0], bishop_attacks),
            Family::KnightKxK => board(p[0], p[0], knight_attacks),
            Family::FlowerSnark => flower_snark(p[0]),
            Family::GenPetersen => generalized_petersen(p[0], p[1]),
            Family::ErdosRenyi => erdos_renyi(p[0], p[1], self.seed.unwrap_or(0)),
            Family::Cycle => Graph::from_edges(p[0], (0..p[0]).map(|i| (i, (i + 1) % p[0]))),
            Family::Path => Graph::from_edges(p[0], (1..p[0]).map(|i| (i - 1, i))),
        }
    }

    /// Known upper domination number of the family member, when one exists.
    pub fn closed_form_gamma(&self) -> Option<usize> {
        if self.validate().is_err() {
            return None;
        }
        let p = &self.params;
        match self.family {
            Family::Queen2xK => {
                let (r, c) = self.two_row_dims().ok()?;
                let k = if r == 2 { c } else { r };
                Some(k.div_ceil(2))
            }
            Family::Rook2xK => {
                let (r, c) = self.two_row_dims().ok()?;
                Some(if r == 2 { c } else { r })
            }
            Family::RookKxK => Some(p[0]),
            Family::BishopKxK => Some(2 * p[0] - 2),
            Family::KnightKxK => Some((p[0] * p[0]).div_ceil(2)),
            Family::FlowerSnark => {
                let k = p[0];
                match k % 2 {
                    0 if k >= 4 => Some(2 * k),
                    1 => Some(2 * k - 1),
                    _ => None,
                }
            }
            Family::GenPetersen => Some(p[0]),
            Family::Complete => Some(1),
            // the larger side is itself a minimal dominating set
            Family::CompleteBipartite => Some(p[0].max(p[1])),
            Family::ErdosRenyi | Family::Cycle | Family::Path => None,
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family)?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        if let Some(seed) = self.seed {
            write!(f, ",seed={seed}")?;
        }
        Ok(())
    }
}

impl FromStr for InstanceSpec {
    type Err = Error;

    /// Parses `family:p1,p2[,seed=S]`.
    fn from_str(s: &str) -> Result<Self> {
        let grammar = "expected `family:p1[,p2...][,seed=S]`";
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidInstance(format!("`{s}`: {grammar}")))?;
        let family: Family = name.trim().parse()?;
        let mut params = Vec::new();
        let mut seed = None;
        for tok in rest.split(',').map(str::trim) {
            if let Some(value) = tok.strip_prefix("seed=") {
                if seed.is_some() {
                    return Err(Error::InvalidInstance(format!("`{s}`: seed given twice")));
                }
                seed =
                    Some(value.parse::<u64>().map_err(|_| {
                        Error::InvalidInstance(format!("`{s}`: bad seed `{value}`"))
                    })?);
            } else if seed.is_some() {
                return Err(Error::InvalidInstance(format!(
                    "`{s}`: seed must come last; {grammar}"
                )));
            } else {
                params.push(tok.parse::<usize>().map_err(|_| {
                    Error::InvalidInstance(format!("`{s}`: bad parameter `{tok}`; {grammar}"))
                })?);
            }
        }
        let spec = InstanceSpec {
            family,
            params,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

type Attack = fn(isize, isize) -> bool;

fn queen_attacks(dr: isize, dc: isize) -> bool {
    rook_attacks(dr, dc) || bishop_attacks(dr, dc)
}

fn rook_attacks(dr: isize, dc: isize) -> bool {
    (dr == 0) != (dc == 0)
}

fn bishop_attacks(dr: isize, dc: isize) -> bool {
    dr != 0 && dr.abs() == dc.abs()
}

fn knight_attacks(dr: isize, dc: isize) -> bool {
    matches!((dr.abs(), dc.abs()), (1, 2) | (2, 1))
}

/// Squares are adjacent when the displacement between them is an attack.
/// Queens, rooks and bishops slide unobstructed, which on an empty board is
/// just the displacement test.
fn board(rows: usize, cols: usize, attacks: Attack) -> Result<Graph> {
    let n = rows * cols;
    let id = |r: usize, c: usize| -> Vertex { r * cols + c };
    let mut edges = Vec::new();
    for a in 0..n {
        let (r1, c1) = (a / cols, a % cols);
        for b in a + 1..n {
            let (r2, c2) = (b / cols, b % cols);
            let dr = r2 as isize - r1 as isize;
            let dc = c2 as isize - c1 as isize;
            if attacks(dr, dc) {
                edges.push((id(r1, c1), id(r2, c2)));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// P(n,k): outer cycle u_i, spokes u_i v_i, inner edges v_i v_{i+k}.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
    Graph::from_edges(2 * n, edges)
}

/// Isaacs flower snark J_k: k claws A_i-{B_i,C_i,D_i}, a k-cycle on the B's,
/// and a single 2k-cycle C_0..C_{k-1} D_0..D_{k-1} closing back to C_0.
pub fn flower_snark(k: usize) -> Result<Graph> {
    let a = |i: usize| i;
    let b = |i: usize| k + i;
    let c = |i: usize| 2 * k + i;
    let d = |i: usize| 3 * k + i;
    let mut edges = Vec::with_capacity(6 * k);
    for i in 0..k {
        edges.extend([
            (a(i), b(i)),
            (a(i), c(i)),
            (a(i), d(i)),
            (b(i), b((i + 1) % k)),
        ]);
        if i + 1 < k {
            edges.extend([(c(i), c(i + 1)), (d(i), d(i + 1))]);
        }
    }
    edges.extend([(c(k - 1), d(0)), (d(k - 1), c(0))]);
    Graph::from_edges(4 * k, edges)
}

/// G(n, p) with p = d/n; each unordered pair is drawn in lexicographic order
/// from a ChaCha8 stream seeded with `seed`.
pub fn erdos_renyi(n: usize, d: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    if d > 0 {
        let (num, den) = (d as u32, n as u32);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_ratio(num, den) {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> InstanceSpec {
        s.parse().unwrap()
    }

    #[test]
    fn generate_examples() {
        let p = spec("gen_petersen:5,2").generate().unwrap();
        assert_eq!((p.n(), p.m(), p.regular_degree()), (10, 15, Some(3)));

        let r = spec("rook2xk:2,3").generate().unwrap();
        assert_eq!((r.n(), r.m(), r.regular_degree()), (6, 9, Some(3)));

        let e = spec("erdos_renyi:10,0").generate().unwrap();
        assert_eq!((e.n(), e.m()), (10, 0));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(spec("queen2xk:2,7").closed_form_gamma(), Some(4));
        assert_eq!(spec("queen2xk:7").closed_form_gamma(), Some(4));
        assert_eq!(spec("flower_snark:3").closed_form_gamma(), Some(5));
        assert_eq!(spec("flower_snark:4").closed_form_gamma(), Some(8));
        assert_eq!(spec("erdos_renyi:20,4").closed_form_gamma(), None);
        assert_eq!(spec("complete_bipartite:2,2").closed_form_gamma(), Some(2));
        assert_eq!(spec("complete_bipartite:2,3").closed_form_gamma(), Some(3));
        assert_eq!(spec("complete_bipartite:4,1").closed_form_gamma(), Some(4));
        assert_eq!(spec("knightkxk:3").closed_form_gamma(), Some(5));
        assert_eq!(spec("bishopkxk:5").closed_form_gamma(), Some(8));
        assert_eq!(spec("gen_petersen:7,3").closed_form_gamma(), Some(7));
        assert_eq!(spec("cycle:5").closed_form_gamma(), None);
    }

    #[test]
    fn invalid_params_name_the_bound() {
        let err = |s: &str| s.parse::<InstanceSpec>().unwrap_err().to_string();
        assert!(err("gen_petersen:6,3").contains("k < n/2"));
        assert!(err("gen_petersen:2,1").contains("n >= 3"));
        assert!(err("flower_snark:2").contains("k >= 3"));
        assert!(err("knightkxk:2").contains("k >= 3"));
        assert!(err("bishopkxk:1").contains("k >= 2"));
        assert!(err("erdos_renyi:5,6").contains("d <= n"));
        assert!(err("queen2xk:3,3").contains("no side of length 2"));
        assert!(err("hexagon:3").contains("unknown family"));
        assert!(err("complete").contains("expected `family:"));
        assert!(err("complete:x").contains("bad parameter"));
    }

    #[test]
    fn spec_string_round_trip() {
        let s = spec("erdos_renyi:40,4,seed=17");
        assert_eq!(s.params, vec![40, 4]);
        assert_eq!(s.seed, Some(17));
        assert_eq!(s.to_string(), "erdos_renyi:40,4,seed=17");
        assert_eq!(spec("gen_petersen:7,2").to_string(), "gen_petersen:7,2");
    }

    #[test]
    fn cubic_families_are_three_regular() {
        for n in 3..=12 {
            for k in 1..n {
                if 2 * k >= n {
                    continue;
                }
                let g = generalized_petersen(n, k).unwrap();
                assert_eq!(g.n(), 2 * n);
                assert!((0..g.n()).all(|v| g.degree(v) == 3), "P({n},{k})");
            }
        }
        for k in 3..=10 {
            let g = flower_snark(k).unwrap();
            assert_eq!((g.n(), g.m()), (4 * k, 6 * k));
            assert!((0..g.n()).all(|v| g.degree(v) == 3), "J_{k}");
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for s in ["erdos_renyi:30,5,seed=3", "queen2xk:9", "flower_snark:5"] {
            assert_eq!(
                spec(s).generate().unwrap().to_text(),
                spec(s).generate().unwrap().to_text()
            );
        }
        let a = spec("erdos_renyi:30,5,seed=3").generate().unwrap();
        let b = spec("erdos_renyi:30,5,seed=4").generate().unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn board_transpose_has_same_degrees() {
        for k in 1..=9 {
            for fam in ["queen2xk", "rook2xk"] {
                let wide = spec(&format!("{fam}:2,{k}")).generate().unwrap();
                let tall = spec(&format!("{fam}:{k},2")).generate().unwrap();
                assert_eq!(wide.degree_sequence(), tall.degree_sequence());
                assert_eq!(wide.m(), tall.m());
            }
        }
    }

    #[test]
    fn board_degrees() {
        // queen on 2 x k: k-1 along the row, 1 down the column, plus diagonals
        let q = spec("queen2xk:4").generate().unwrap();
        assert_eq!(q.degree(0), 3 + 1 + 1);
        assert_eq!(q.degree(1), 3 + 1 + 2);
        let n = spec("knightkxk:3").generate().unwrap();
        assert_eq!(n.degree(4), 0);
        assert_eq!(n.m(), 8);
        let b = spec("bishopkxk:2").generate().unwrap();
        assert_eq!(b.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
        let r = spec("rookkxk:3").generate().unwrap();
        assert_eq!(r.regular_degree(), Some(4));
        let kb = spec("complete_bipartite:2,3").generate().unwrap();
        assert_eq!((kb.n(), kb.m()), (5, 6));
    }

    #[test]
    fn erdos_renyi_edge_count_within_five_sigma() {
        let (n, d) = (40usize, 5usize);
        let p = d as f64 / n as f64;
        let pairs = (n * (n - 1) / 2) as f64;
        let seeds = 200u64;
        let total: usize = (0..seeds).map(|s| erdos_renyi(n, d, s).unwrap().m()).sum();
        let mean = total as f64 / seeds as f64;
        let sd_of_mean = (pairs * p * (1.0 - p) / seeds as f64).sqrt();
        assert!((mean - p * pairs).abs() <= 5.0 * sd_of_mean, "mean {mean}");
        // per-seed counts also stay within 5 sd of a single draw
        let sd = (pairs * p * (1.0 - p)).sqrt();
        for s in 0..seeds {
            let m = erdos_renyi(n, d, s).unwrap().m() as f64;
            assert!((m - p * pairs).abs() <= 5.0 * sd, "seed {s}: {m}");
        }
    }
}
