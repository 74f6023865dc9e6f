//! Exact depth-first branch-and-bound for pure binary linear programs.
//!
//! Rows are kept in `<=` form together with their minimum activity under the
//! current fixings. A row whose minimum activity exceeds its right-hand side
//! cannot be satisfied by any completion; a row whose slack is smaller than
//! the coefficient of an unfixed variable forces that variable. The objective
//! (always handled as maximization internally) is bounded by the fixed part
//! plus every positive coefficient still free, and once an incumbent exists
//! the same slack argument is applied to the requirement of beating it.
//!
//! Branching takes the free variable with the largest objective coefficient
//! (ties to the smallest id) and tries the value that helps the objective
//! first; zero-coefficient variables try 1 first when maximizing and 0 first
//! when minimizing. The search is fully deterministic.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::model::{Assignment, Feasibility, LinearModel, Relation, Sense, VarKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Optimal,
    Infeasible,
    TimeLimit,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Optimal => "optimal",
            Status::Infeasible => "infeasible",
            Status::TimeLimit => "time_limit",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: Status,
    /// Objective of `assignment` in the model's own sense.
    pub objective: Option<i64>,
    pub assignment: Option<Assignment>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub time_limit: Duration,
    /// Feasible starting incumbent, e.g. from [`crate::warm_start`].
    pub warm_start: Option<Assignment>,
}

impl SolveOptions {
    pub fn with_time_limit(seconds: f64) -> Result<Self> {
        if seconds.is_nan() || seconds <= 0.0 || !seconds.is_finite() {
            return Err(Error::BadTimeLimit);
        }
        Ok(Self {
            time_limit: Duration::from_secs_f64(seconds),
            warm_start: None,
        })
    }
}

pub fn solve(model: &LinearModel, time_limit_seconds: f64) -> Result<SolveResult> {
    solve_with(model, &SolveOptions::with_time_limit(time_limit_seconds)?)
}

pub fn solve_with(model: &LinearModel, options: &SolveOptions) -> Result<SolveResult> {
    if options.time_limit.is_zero() {
        return Err(Error::BadTimeLimit);
    }
    if let Some(v) = model.variables().iter().find(|v| v.kind != VarKind::Binary) {
        return Err(Error::NonBinary(v.name.clone()));
    }
    let start = Instant::now();
    let mut search = Search::new(model, start + options.time_limit);
    if let Some(ws) = &options.warm_start {
        if let Feasibility::Violated(name) = model.check_feasible(ws)? {
            return Err(Error::Infeasible(name));
        }
        search.incumbent = Some((search.max_objective(ws.values()), ws.values().to_vec()));
    }
    if search.propagate_all() {
        search.node();
    }
    let status = if search.timed_out {
        Status::TimeLimit
    } else if search.incumbent.is_some() {
        Status::Optimal
    } else {
        Status::Infeasible
    };
    let assignment = search.incumbent.map(|(_, values)| Assignment::new(values));
    Ok(SolveResult {
        status,
        objective: assignment.as_ref().map(|a| model.objective_value(a)),
        assignment,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    })
}

const FREE: i8 = -1;

struct Search {
    /// Rows in `<=` form: (terms, rhs).
    rows: Vec<(Vec<(usize, i64)>, i64)>,
    row_max_abs: Vec<i64>,
    cols: Vec<Vec<(usize, i64)>>,
    /// Maximization-form objective.
    obj: Vec<i64>,
    max_pos_obj: i64,
    order: Vec<usize>,
    prefer_one: Vec<bool>,

    value: Vec<i8>,
    min_act: Vec<i64>,
    fixed_obj: i64,
    free_pos: i64,
    trail: Vec<usize>,
    queue: Vec<usize>,

    incumbent: Option<(i64, Vec<bool>)>,
    nodes: u64,
    deadline: Instant,
    timed_out: bool,
}

impl Search {
    fn new(model: &LinearModel, deadline: Instant) -> Self {
        let nv = model.num_vars();
        let sign = match model.sense {
            Sense::Maximize => 1,
            Sense::Minimize => -1,
        };
        let obj: Vec<i64> = model.objective().iter().map(|&c| sign * c).collect();

        let mut rows = Vec::with_capacity(model.num_constraints());
        let mut cols = vec![Vec::new(); nv];
        for c in model.constraints() {
            let (terms, rhs): (Vec<(usize, i64)>, i64) = match c.relation {
                Relation::Le => (c.terms.clone(), c.rhs),
                Relation::Ge => (c.terms.iter().map(|&(j, a)| (j, -a)).collect(), -c.rhs),
            };
            for &(j, a) in &terms {
                cols[j].push((rows.len(), a));
            }
            rows.push((terms, rhs));
        }
        let row_max_abs = rows
            .iter()
            .map(|(t, _)| t.iter().map(|&(_, a)| a.abs()).max().unwrap_or(0))
            .collect();
        let min_act = rows
            .iter()
            .map(|(t, _)| t.iter().map(|&(_, a)| a.min(0)).sum())
            .collect();

        let mut order: Vec<usize> = (0..nv).collect();
        order.sort_by_key(|&j| (std::cmp::Reverse(obj[j]), j));
        let prefer_one = obj
            .iter()
            .map(|&c| c > 0 || (c == 0 && model.sense == Sense::Maximize))
            .collect();

        Self {
            row_max_abs,
            cols,
            max_pos_obj: obj.iter().copied().max().unwrap_or(0).max(0),
            free_pos: obj.iter().filter(|&&c| c > 0).sum(),
            obj,
            order,
            prefer_one,
            value: vec![FREE; nv],
            min_act,
            fixed_obj: 0,
            trail: Vec::with_capacity(nv),
            queue: Vec::new(),
            rows,
            incumbent: None,
            nodes: 0,
            deadline,
            timed_out: false,
        }
    }

    fn max_objective(&self, values: &[bool]) -> i64 {
        self.obj
            .iter()
            .zip(values)
            .filter(|(_, &on)| on)
            .map(|(&c, _)| c)
            .sum()
    }

    fn optimistic(&self) -> i64 {
        self.fixed_obj + self.free_pos
    }

    fn fix(&mut self, j: usize, on: bool) {
        debug_assert_eq!(self.value[j], FREE);
        self.value[j] = i8::from(on);
        self.trail.push(j);
        for &(r, a) in &self.cols[j] {
            self.min_act[r] += if on { a } else { 0 } - a.min(0);
            self.queue.push(r);
        }
        let c = self.obj[j];
        if c > 0 {
            self.free_pos -= c;
        }
        if on {
            self.fixed_obj += c;
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let j = self.trail.pop().unwrap();
            let on = self.value[j] == 1;
            self.value[j] = FREE;
            for &(r, a) in &self.cols[j] {
                self.min_act[r] -= if on { a } else { 0 } - a.min(0);
            }
            let c = self.obj[j];
            if c > 0 {
                self.free_pos += c;
            }
            if on {
                self.fixed_obj -= c;
            }
        }
    }

    /// Propagates queued rows and the incumbent cutoff to a fixpoint.
    /// Returns false on a conflict.
    fn propagate(&mut self) -> bool {
        loop {
            while let Some(r) = self.queue.pop() {
                let slack = self.rows[r].1 - self.min_act[r];
                if slack < 0 {
                    self.queue.clear();
                    return false;
                }
                if slack >= self.row_max_abs[r] {
                    continue;
                }
                for t in 0..self.rows[r].0.len() {
                    let (j, a) = self.rows[r].0[t];
                    if self.value[j] != FREE || a.abs() <= slack {
                        continue;
                    }
                    self.fix(j, a < 0);
                }
            }
            let Some((best, _)) = self.incumbent else {
                return true;
            };
            let slack = self.optimistic() - (best + 1);
            if slack < 0 {
                return false;
            }
            if slack >= self.max_pos_obj && !self.obj.iter().any(|&c| c < 0 && -c > slack) {
                return true;
            }
            let mut forced = false;
            for j in 0..self.obj.len() {
                let c = self.obj[j];
                if self.value[j] == FREE && c.abs() > slack {
                    self.fix(j, c > 0);
                    forced = true;
                }
            }
            if !forced {
                return true;
            }
        }
    }

    fn propagate_all(&mut self) -> bool {
        self.queue.extend(0..self.rows.len());
        self.propagate()
    }

    fn out_of_time(&mut self) -> bool {
        if !self.timed_out && self.nodes % 256 == 1 && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        self.timed_out
    }

    fn node(&mut self) {
        self.nodes += 1;
        if self.out_of_time() {
            return;
        }
        if let Some((best, _)) = self.incumbent {
            if self.optimistic() <= best {
                return;
            }
        }
        let Some(j) = self.order.iter().copied().find(|&j| self.value[j] == FREE) else {
            let better = self
                .incumbent
                .as_ref()
                .is_none_or(|(best, _)| self.fixed_obj > *best);
            if better {
                let values = self.value.iter().map(|&v| v == 1).collect();
                self.incumbent = Some((self.fixed_obj, values));
            }
            return;
        };
        let first = self.prefer_one[j];
        for on in [first, !first] {
            let mark = self.trail.len();
            self.fix(j, on);
            if self.propagate() {
                self.node();
            }
            self.undo_to(mark);
            if self.timed_out {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::instance::InstanceSpec;
    use crate::model::{build_domination, build_f1, build_f2};

    fn graph(spec: &str) -> Graph {
        spec.parse::<InstanceSpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn petersen_f1() {
        let r = solve(&build_f1(&graph("gen_petersen:5,2"), true), 60.0).unwrap();
        assert_eq!(r.status, Status::Optimal);
        assert_eq!(r.objective, Some(5));
    }

    #[test]
    fn queen_f2() {
        let r = solve(&build_f2(&graph("queen2xk:5")), 60.0).unwrap();
        assert_eq!((r.status, r.objective), (Status::Optimal, Some(3)));
    }

    #[test]
    fn contradictory_rows_are_infeasible() {
        let mut m = LinearModel::new(Sense::Maximize);
        let x = m.add_var("x0", VarKind::Binary);
        m.set_objective(x, 1);
        m.add_constraint("lo", [(x, 1)], Relation::Ge, 1);
        m.add_constraint("hi", [(x, 1)], Relation::Le, 0);
        let r = solve(&m, 10.0).unwrap();
        assert_eq!(r.status, Status::Infeasible);
        assert!(r.assignment.is_none() && r.objective.is_none());
    }

    #[test]
    fn empty_row_with_negative_rhs_is_infeasible() {
        let mut m = LinearModel::new(Sense::Minimize);
        m.add_var("x0", VarKind::Binary);
        m.add_constraint("bad", [], Relation::Le, -1);
        assert_eq!(solve(&m, 10.0).unwrap().status, Status::Infeasible);
    }

    #[test]
    fn usage_errors() {
        let m = build_domination(&graph("cycle:4"));
        assert_eq!(solve(&m, 0.0).unwrap_err(), Error::BadTimeLimit);
        assert_eq!(solve(&m, -1.0).unwrap_err(), Error::BadTimeLimit);
        let mut m = LinearModel::new(Sense::Maximize);
        m.add_var("n", VarKind::Integer);
        assert_eq!(solve(&m, 1.0).unwrap_err(), Error::NonBinary("n".into()));
    }

    #[test]
    fn domination_minimizes() {
        let r = solve(&build_domination(&graph("cycle:4")), 10.0).unwrap();
        assert_eq!(r.objective, Some(2));
        let r = solve(&build_domination(&Graph::edgeless(4).unwrap()), 10.0).unwrap();
        assert_eq!(r.objective, Some(4));
        let r = solve(&build_domination(&graph("complete:5")), 10.0).unwrap();
        assert_eq!(r.objective, Some(1));
    }

    #[test]
    fn optimal_result_is_feasible_and_consistent() {
        for spec in ["flower_snark:3", "knightkxk:3", "erdos_renyi:12,5,seed=9"] {
            let g = graph(spec);
            for m in [
                build_f1(&g, true),
                build_f1(&g, false),
                build_f2(&g),
                build_domination(&g),
            ] {
                let r = solve(&m, 60.0).unwrap();
                let a = r.assignment.as_ref().unwrap();
                assert!(m.check_feasible(a).unwrap().is_feasible());
                assert_eq!(r.objective, Some(m.objective_value(a)));
            }
        }
    }

    #[test]
    fn deterministic_node_counts() {
        let m = build_f2(&graph("flower_snark:4"));
        let a = solve(&m, 60.0).unwrap();
        let b = solve(&m, 60.0).unwrap();
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.assignment, b.assignment);
    }

    #[test]
    fn warm_start_keeps_optimum() {
        let g = graph("gen_petersen:7,2");
        let m = build_f1(&g, true);
        let mut opts = SolveOptions::with_time_limit(60.0).unwrap();
        opts.warm_start = Some(crate::warm_start(&g, crate::Formulation::F1));
        let warm = solve_with(&m, &opts).unwrap();
        let cold = solve(&m, 60.0).unwrap();
        assert_eq!(warm.objective, Some(7));
        assert_eq!(cold.objective, Some(7));

        opts.warm_start = Some(Assignment::zeros(m.num_vars()));
        assert!(matches!(solve_with(&m, &opts), Err(Error::Infeasible(_))));
    }

    #[test]
    fn tiny_time_limit_reports_time_limit() {
        let m = build_f1(&graph("rookkxk:7"), true);
        let r = solve(&m, 1e-9).unwrap();
        assert_eq!(r.status, Status::TimeLimit);
    }
}
