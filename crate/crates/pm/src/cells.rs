//! Cell decomposition, action classification and neighbor pairs.

use serde::{Deserialize, Serialize};

use crate::game::PmGame;
use crate::linalg::sub;
use crate::polytope::{affine_dimension, SimplexPolytope};
use crate::rational::Q;

/// The set of outcome distributions under which one action is optimal.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub action: usize,
    pub polytope: SimplexPolytope,
    pub vertices: Vec<Vec<Q>>,
    pub dimension: i64,
}

impl Cell {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Every vertex of `self` satisfies `other`'s system.
    pub fn is_subset_of(&self, other: &Cell) -> bool {
        self.vertices.iter().all(|v| other.polytope.contains(v))
    }

    /// `self` is a strict subset of `other`.
    pub fn is_strict_subset_of(&self, other: &Cell) -> bool {
        self.is_subset_of(other)
            && (self.dimension != other.dimension || other.vertices.iter().any(|v| !self.polytope.contains(v)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionKind {
    Dominated,
    Degenerate,
    ParetoOptimal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub cells: Vec<Cell>,
    pub kinds: Vec<ActionKind>,
    /// For each degenerate action, the actions whose cells strictly contain it.
    pub containers: Vec<Vec<usize>>,
}

impl Classification {
    pub fn of_kind(&self, kind: ActionKind) -> Vec<usize> {
        (0..self.kinds.len()).filter(|&i| self.kinds[i] == kind).collect()
    }
}

/// Constraint rows `l_i - l_j >= 0` for all `j != i`.
pub fn optimality_rows(game: &PmGame, action: usize) -> Vec<Vec<Q>> {
    let li = game.gain_row(action);
    (0..game.num_actions())
        .filter(|&j| j != action)
        .map(|j| sub(li, game.gain_row(j)))
        .collect()
}

pub fn cell(game: &PmGame, action: usize) -> Cell {
    let polytope = SimplexPolytope::simplex(game.num_outcomes()).with_constraints(optimality_rows(game, action));
    let vertices = polytope.vertices();
    let dimension = affine_dimension(&vertices);
    Cell { action, polytope, vertices, dimension }
}

pub fn classify_actions(game: &PmGame) -> Classification {
    let cells: Vec<Cell> = (0..game.num_actions()).map(|i| cell(game, i)).collect();
    let mut kinds = Vec::with_capacity(cells.len());
    let mut containers = Vec::with_capacity(cells.len());
    for c in &cells {
        if c.is_empty() {
            kinds.push(ActionKind::Dominated);
            containers.push(Vec::new());
            continue;
        }
        let sup: Vec<usize> = cells
            .iter()
            .filter(|o| o.action != c.action && c.is_strict_subset_of(o))
            .map(|o| o.action)
            .collect();
        kinds.push(if sup.is_empty() { ActionKind::ParetoOptimal } else { ActionKind::Degenerate });
        containers.push(sup);
    }
    Classification { cells, kinds, containers }
}

/// Two Pareto-optimal actions whose cells meet in a polytope of dimension `M - 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborPair {
    pub i: usize,
    pub j: usize,
    pub vertices: Vec<Vec<Q>>,
    pub dimension: i64,
    /// Actions whose cells contain the intersection.
    pub neighborhood: Vec<usize>,
}

pub fn intersection(a: &Cell, b: &Cell) -> SimplexPolytope {
    a.polytope.clone().with_constraints(b.polytope.constraints().iter().cloned())
}

pub fn neighbors(game: &PmGame, classes: &Classification) -> Vec<NeighborPair> {
    let m = game.num_outcomes() as i64;
    let pareto = classes.of_kind(ActionKind::ParetoOptimal);
    let mut out = Vec::new();
    for (a, &i) in pareto.iter().enumerate() {
        for &j in &pareto[a + 1..] {
            let poly = intersection(&classes.cells[i], &classes.cells[j]);
            let vertices = poly.vertices();
            let dimension = affine_dimension(&vertices);
            if dimension != m - 2 {
                continue;
            }
            let neighborhood = classes
                .cells
                .iter()
                .filter(|c| vertices.iter().all(|v| c.polytope.contains(v)))
                .map(|c| c.action)
                .collect();
            out.push(NeighborPair { i, j, vertices, dimension, neighborhood });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn game(rows: &[[i64; 2]]) -> PmGame {
        let gain = rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect();
        let fb = rows.iter().map(|_| vec!["a".to_string(), "b".to_string()]).collect();
        PmGame::new(gain, fb).unwrap()
    }

    #[test]
    fn two_outcome_classification() {
        // Two experts, a dominated constant and a degenerate tie point.
        let g = game(&[[1, 0], [0, 1], [-1, -1], [0, 0]]);
        let c = classify_actions(&g);
        assert_eq!(c.kinds[0], ActionKind::ParetoOptimal);
        assert_eq!(c.kinds[1], ActionKind::ParetoOptimal);
        assert_eq!(c.kinds[2], ActionKind::Dominated);
        assert_eq!(c.kinds[3], ActionKind::Dominated);
        let n = neighbors(&g, &c);
        assert_eq!(n.len(), 1);
        assert_eq!(n[0].dimension, 0);
        assert_eq!(n[0].vertices, vec![vec![q(1, 2), q(1, 2)]]);
    }

    #[test]
    fn tie_action_is_degenerate() {
        let g = game(&[[2, 0], [0, 2], [1, 1]]);
        let c = classify_actions(&g);
        assert_eq!(c.kinds[2], ActionKind::Degenerate);
        assert_eq!(c.containers[2], vec![0, 1]);
        let n = neighbors(&g, &c);
        assert_eq!(n[0].neighborhood, vec![0, 1, 2]);
    }
}
