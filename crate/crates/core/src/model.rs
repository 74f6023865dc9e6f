//! Binary linear programs and the three graph models built on them:
//! minimum domination, and the two upper domination formulations.
//!
//! Every builder lays out the `x` variables first, so `x_v` has id `v`.
//! Variable names follow `x{v}`, `z{v}` and `y{v}_{w}`; constraint names are
//! `c{v}` (domination), `dom{v}`/`two{v}`/`priv{v}`/`red{v}` (first
//! formulation) and `dom{v}`/`own{v}`/`only{v}_{w}` (second formulation).
//!
//! All coefficients are integers and rows are evaluated exactly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub type VarId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    Binary,
    /// General integer; only representable, never produced by the builders and
    /// rejected by the solver.
    Integer,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub name: String,
    /// Sorted by variable id, no zero coefficients.
    pub terms: Vec<(VarId, i64)>,
    pub relation: Relation,
    pub rhs: i64,
}

impl Constraint {
    pub fn activity(&self, values: &[bool]) -> i64 {
        self.terms
            .iter()
            .filter(|&&(j, _)| values[j])
            .map(|&(_, a)| a)
            .sum()
    }

    pub fn is_satisfied(&self, values: &[bool]) -> bool {
        self.relation.holds(self.activity(values), self.rhs)
    }
}

#[derive(Debug, Clone)]
pub struct LinearModel {
    pub sense: Sense,
    variables: Vec<Variable>,
    objective: Vec<i64>,
    constraints: Vec<Constraint>,
    index: HashMap<String, VarId>,
}

impl PartialEq for LinearModel {
    fn eq(&self, other: &Self) -> bool {
        self.sense == other.sense
            && self.variables == other.variables
            && self.objective == other.objective
            && self.constraints == other.constraints
    }
}

impl Eq for LinearModel {}

impl LinearModel {
    pub fn new(sense: Sense) -> Self {
        Self {
            sense,
            variables: Vec::new(),
            objective: Vec::new(),
            constraints: Vec::new(),
            index: HashMap::new(),
        }
    }

    /// Declares a variable. Panics on a duplicate name.
    pub fn add_var(&mut self, name: impl Into<String>, kind: VarKind) -> VarId {
        let name = name.into();
        let id = self.variables.len();
        let previous = self.index.insert(name.clone(), id);
        assert!(previous.is_none(), "duplicate variable `{name}`");
        self.variables.push(Variable { name, kind });
        self.objective.push(0);
        id
    }

    pub fn set_objective(&mut self, var: VarId, coef: i64) {
        self.objective[var] = coef;
    }

    /// Adds a row. Terms are merged per variable, sorted, and zero
    /// coefficients dropped. Panics on an undeclared variable.
    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        terms: impl IntoIterator<Item = (VarId, i64)>,
        relation: Relation,
        rhs: i64,
    ) {
        let mut terms: Vec<(VarId, i64)> = terms.into_iter().collect();
        terms.sort_unstable_by_key(|&(j, _)| j);
        let mut merged: Vec<(VarId, i64)> = Vec::with_capacity(terms.len());
        for (j, a) in terms {
            assert!(j < self.variables.len(), "undeclared variable id {j}");
            match merged.last_mut() {
                Some((k, b)) if *k == j => *b += a,
                _ => merged.push((j, a)),
            }
        }
        merged.retain(|&(_, a)| a != 0);
        self.constraints.push(Constraint {
            name: name.into(),
            terms: merged,
            relation,
            rhs,
        });
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn objective(&self) -> &[i64] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn var_id(&self, name: &str) -> Option<VarId> {
        self.index.get(name).copied()
    }

    pub fn objective_value(&self, a: &Assignment) -> i64 {
        self.objective
            .iter()
            .zip(a.values())
            .filter(|(_, &on)| on)
            .map(|(&c, _)| c)
            .sum()
    }

    /// Evaluates every row in order and reports the first violation.
    pub fn check_feasible(&self, a: &Assignment) -> Result<Feasibility> {
        if a.len() != self.num_vars() {
            return Err(Error::AssignmentSize {
                expected: self.num_vars(),
                got: a.len(),
            });
        }
        Ok(self
            .constraints
            .iter()
            .find(|c| !c.is_satisfied(a.values()))
            .map_or(Feasibility::Feasible, |c| {
                Feasibility::Violated(c.name.clone())
            }))
    }

    /// Vertices whose `x{v}` variable is set. The assignment must be feasible.
    pub fn decode(&self, a: &Assignment) -> Result<VertexSet> {
        if let Feasibility::Violated(name) = self.check_feasible(a)? {
            return Err(Error::Infeasible(name));
        }
        Ok(self
            .variables
            .iter()
            .zip(a.values())
            .filter(|(_, &on)| on)
            .filter_map(|(var, _)| vertex_of_x(&var.name))
            .collect())
    }

    /// `<label> vars=<k> cons=<c>`
    pub fn summary(&self, label: &str) -> String {
        format!(
            "{label} vars={} cons={}",
            self.num_vars(),
            self.num_constraints()
        )
    }
}

fn vertex_of_x(name: &str) -> Option<Vertex> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    Violated(String),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible)
    }
}

/// 0/1 value per model variable, in variable-id order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Self(values)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![false; len])
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        Self(bits.iter().map(|&b| b != 0).collect())
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, var: VarId) -> bool {
        self.0[var]
    }

    pub fn set(&mut self, var: VarId, value: bool) {
        self.0[var] = value;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Which graph model a [`LinearModel`] encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formulation {
    /// Minimum dominating set.
    Domination,
    /// First upper domination formulation, all four row families.
    F1,
    /// First formulation without the redundant `red{v}` rows.
    F1Min,
    /// Second upper domination formulation.
    F2,
}

impl Formulation {
    pub fn name(self) -> &'static str {
        match self {
            Formulation::Domination => "domination",
            Formulation::F1 => "f1",
            Formulation::F1Min => "f1-min",
            Formulation::F2 => "f2",
        }
    }

    pub fn build(self, g: &Graph) -> LinearModel {
        match self {
            Formulation::Domination => build_domination(g),
            Formulation::F1 => build_f1(g, true),
            Formulation::F1Min => build_f1(g, false),
            Formulation::F2 => build_f2(g),
        }
    }

    /// Feasible assignment for this model from a minimal dominating set.
    pub fn encode(self, g: &Graph, s: &VertexSet) -> Result<Assignment> {
        match self {
            Formulation::Domination => {
                if !g.is_dominating(s)? {
                    return Err(Error::NotMinimal(format!("{s} does not dominate")));
                }
                Ok(x_assignment(g, s, g.n()))
            }
            Formulation::F1 | Formulation::F1Min => encode_f1(g, s),
            Formulation::F2 => encode_f2(g, s),
        }
    }
}

impl fmt::Display for Formulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formulation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "domination" => Ok(Formulation::Domination),
            "f1" => Ok(Formulation::F1),
            "f1-min" => Ok(Formulation::F1Min),
            "f2" => Ok(Formulation::F2),
            _ => Err(format!(
                "unknown formulation `{s}` (expected domination, f1, f1-min or f2)"
            )),
        }
    }
}

fn declare_x(model: &mut LinearModel, g: &Graph, objective: i64) {
    for v in 0..g.n() {
        let id = model.add_var(format!("x{v}"), VarKind::Binary);
        model.set_objective(id, objective);
    }
}

fn closed_sum(g: &Graph, v: Vertex, coef: i64) -> Vec<(VarId, i64)> {
    g.closed_neighbors(v)
        .into_iter()
        .map(|w| (w, coef))
        .collect()
}

/// min sum x_v  s.t.  sum_{w in N[v]} x_w >= 1 for every v.
pub fn build_domination(g: &Graph) -> LinearModel {
    let mut m = LinearModel::new(Sense::Minimize);
    declare_x(&mut m, g, 1);
    for v in 0..g.n() {
        m.add_constraint(format!("c{v}"), closed_sum(g, v, 1), Relation::Ge, 1);
    }
    m
}

/// First upper domination formulation over `x_v` (membership) and `z_v`
/// (`|S ∩ N[v]| >= 2`). Per vertex:
///
/// ```text
/// dom{v}:  sum_{N[v]} x            >= 1
/// two{v}:  sum_{N[v]} x - d(v) z_v <= 1
/// priv{v}: x_v + sum_{N[v]} z      <= d(v) + 1
/// red{v}:  z_v - sum_{N[v]} x      <= -1      (only with `include_redundant`)
/// ```
pub fn build_f1(g: &Graph, include_redundant: bool) -> LinearModel {
    let n = g.n();
    let z = |v: Vertex| n + v;
    let mut m = LinearModel::new(Sense::Maximize);
    declare_x(&mut m, g, 1);
    for v in 0..n {
        m.add_var(format!("z{v}"), VarKind::Binary);
    }
    for v in 0..n {
        m.add_constraint(format!("dom{v}"), closed_sum(g, v, 1), Relation::Ge, 1);
    }
    for v in 0..n {
        let d = g.degree(v) as i64;
        let mut row = closed_sum(g, v, 1);
        row.push((z(v), -d));
        m.add_constraint(format!("two{v}"), row, Relation::Le, 1);
    }
    for v in 0..n {
        let d = g.degree(v) as i64;
        let mut row: Vec<(VarId, i64)> = g
            .closed_neighbors(v)
            .into_iter()
            .map(|w| (z(w), 1))
            .collect();
        row.push((v, 1));
        m.add_constraint(format!("priv{v}"), row, Relation::Le, d + 1);
    }
    if include_redundant {
        for v in 0..n {
            let mut row = closed_sum(g, v, -1);
            row.push((z(v), 1));
            m.add_constraint(format!("red{v}"), row, Relation::Le, -1);
        }
    }
    m
}

/// Variable id of `y{v}_{w}` in [`build_f2`]'s layout, for `w` in N[v].
struct F2Layout {
    offsets: Vec<VarId>,
    closed: Vec<Vec<Vertex>>,
}

impl F2Layout {
    fn new(g: &Graph) -> Self {
        let closed: Vec<Vec<Vertex>> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
        let mut offsets = Vec::with_capacity(g.n());
        let mut next = g.n();
        for list in &closed {
            offsets.push(next);
            next += list.len();
        }
        Self { offsets, closed }
    }

    fn y(&self, v: Vertex, w: Vertex) -> VarId {
        let pos = self.closed[v]
            .binary_search(&w)
            .expect("w must lie in N[v]");
        self.offsets[v] + pos
    }

    fn total(&self) -> usize {
        self.offsets.len() + self.closed.iter().map(Vec::len).sum::<usize>()
    }
}

/// Second upper domination formulation over `x_v` and `y_{vw}` for every
/// `w` in N[v] (`w` is dominated only by `v`):
///
/// ```text
/// dom{v}:      sum_{N[v]} x                         >= 1
/// own{v}:      x_v - sum_{w in N[v]} y_{vw}         <= 0
/// only{v}_{w}: d(w) y_{vw} + sum_{u in N[w]\v} x_u  <= d(w)
/// ```
///
/// That gives `2|V| + 2|E|` variables and `3|V| + 2|E|` rows.
pub fn build_f2(g: &Graph) -> LinearModel {
    let n = g.n();
    let layout = F2Layout::new(g);
    let mut m = LinearModel::new(Sense::Maximize);
    declare_x(&mut m, g, 1);
    for v in 0..n {
        for &w in &layout.closed[v] {
            m.add_var(format!("y{v}_{w}"), VarKind::Binary);
        }
    }
    for v in 0..n {
        m.add_constraint(format!("dom{v}"), closed_sum(g, v, 1), Relation::Ge, 1);
    }
    for v in 0..n {
        let mut row: Vec<(VarId, i64)> = layout.closed[v]
            .iter()
            .map(|&w| (layout.y(v, w), -1))
            .collect();
        row.push((v, 1));
        m.add_constraint(format!("own{v}"), row, Relation::Le, 0);
    }
    for v in 0..n {
        for &w in &layout.closed[v] {
            let d = g.degree(w) as i64;
            let mut row: Vec<(VarId, i64)> = layout.closed[w]
                .iter()
                .filter(|&&u| u != v)
                .map(|&u| (u, 1))
                .collect();
            row.push((layout.y(v, w), d));
            m.add_constraint(format!("only{v}_{w}"), row, Relation::Le, d);
        }
    }
    debug_assert_eq!(m.num_vars(), layout.total());
    m
}

fn x_assignment(g: &Graph, s: &VertexSet, len: usize) -> Assignment {
    let mut a = Assignment::zeros(len);
    for v in s.iter().filter(|&v| v < g.n()) {
        a.set(v, true);
    }
    a
}

fn require_minimal(g: &Graph, s: &VertexSet) -> Result<()> {
    if g.is_minimal_dominating(s)? {
        Ok(())
    } else {
        Err(Error::NotMinimal(s.to_string()))
    }
}

/// `x` from membership; `z_w = 0` exactly when N[w] meets `s` once.
pub fn encode_f1(g: &Graph, s: &VertexSet) -> Result<Assignment> {
    require_minimal(g, s)?;
    let n = g.n();
    let mut a = x_assignment(g, s, 2 * n);
    for w in 0..n {
        let hits = g
            .closed_neighbors(w)
            .into_iter()
            .filter(|&u| s.contains(u))
            .count();
        a.set(n + w, hits != 1);
    }
    Ok(a)
}

/// `x` from membership; for each member `v`, `y_{v r(v)} = 1` where `r(v)`
/// is the smallest private neighbor of `v`. All other `y` are 0.
pub fn encode_f2(g: &Graph, s: &VertexSet) -> Result<Assignment> {
    require_minimal(g, s)?;
    let layout = F2Layout::new(g);
    let mut a = x_assignment(g, s, layout.total());
    for v in s.iter() {
        let private = g.private_neighbors(s, v)?;
        let r = private.members()[0];
        a.set(layout.y(v, r), true);
    }
    Ok(a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Oracle,
    F1,
    F2,
    ClosedForm,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Oracle => "oracle",
            Provenance::F1 => "F1",
            Provenance::F2 => "F2",
            Provenance::ClosedForm => "closed_form",
        })
    }
}

/// An upper domination value backed by a minimal dominating set of that size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaCertificate {
    pub gamma: usize,
    pub witness: VertexSet,
    pub provenance: Provenance,
}

impl GammaCertificate {
    pub fn new(g: &Graph, witness: VertexSet, provenance: Provenance) -> Result<Self> {
        require_minimal(g, &witness)?;
        Ok(Self {
            gamma: witness.len(),
            witness,
            provenance,
        })
    }

    /// Decodes a feasible solution of an upper domination model and checks
    /// that it is a minimal dominating set of `g`.
    pub fn from_solution(
        g: &Graph,
        model: &LinearModel,
        a: &Assignment,
        provenance: Provenance,
    ) -> Result<Self> {
        let witness = model.decode(a)?;
        Self::new(g, witness, provenance)
    }
}
