//! Global and local observability with explicit certificates.

use num_traits::Zero;

use crate::cells::NeighborPair;
use crate::game::PmGame;
use crate::linalg::{row_space_basis, span_coefficients, sub};
use crate::rational::Q;

/// One signal row: action `action`, indicator of `symbol`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalRow {
    pub action: usize,
    pub symbol: String,
    pub row: Vec<Q>,
}

/// `l_i - l_j` as a combination of signal rows (zero coefficients omitted).
#[derive(Debug, Clone, PartialEq)]
pub struct SpanCertificate {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(SignalRow, Q)>,
}

impl SpanCertificate {
    /// Recomputes `sum coeff * row`.
    pub fn combination(&self, dim: usize) -> Vec<Q> {
        let mut acc = vec![Q::zero(); dim];
        for (r, c) in &self.terms {
            for (a, x) in acc.iter_mut().zip(&r.row) {
                *a += c * x;
            }
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GlobalObservability {
    pub observable: bool,
    /// Certificates for every pair `i < j`, when observable.
    pub certificates: Vec<SpanCertificate>,
    /// First pair whose difference lies outside the span.
    pub failing_pair: Option<(usize, usize)>,
}

/// Why a neighbor pair is not locally observable.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalWitness {
    pub i: usize,
    pub j: usize,
    pub difference: Vec<Q>,
    /// Basis of the span of the neighborhood's signal rows.
    pub span_basis: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalPairResult {
    pub i: usize,
    pub j: usize,
    pub neighborhood: Vec<usize>,
    pub certificate: Option<SpanCertificate>,
    pub witness: Option<LocalWitness>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LocalObservability {
    /// Vacuously true without neighbor pairs.
    pub observable: bool,
    pub pairs: Vec<LocalPairResult>,
}

impl LocalObservability {
    pub fn first_witness(&self) -> Option<&LocalWitness> {
        self.pairs.iter().find_map(|p| p.witness.as_ref())
    }
}

pub fn signal_rows(game: &PmGame, actions: impl IntoIterator<Item = usize>) -> Vec<SignalRow> {
    actions
        .into_iter()
        .flat_map(|a| {
            let s = game.signal_matrix(a);
            s.symbols.into_iter().zip(s.rows).map(move |(symbol, row)| SignalRow { action: a, symbol, row })
        })
        .collect()
}

fn certify(game: &PmGame, rows: &[SignalRow], i: usize, j: usize) -> Option<SpanCertificate> {
    let diff = sub(game.gain_row(i), game.gain_row(j));
    let gens: Vec<Vec<Q>> = rows.iter().map(|r| r.row.clone()).collect();
    let coeffs = span_coefficients(&gens, &diff)?;
    let terms = rows
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(r, c)| (r.clone(), c))
        .collect();
    Some(SpanCertificate { i, j, terms })
}

pub fn global_observability(game: &PmGame) -> GlobalObservability {
    let rows = signal_rows(game, 0..game.num_actions());
    let n = game.num_actions();
    let mut certificates = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match certify(game, &rows, i, j) {
                Some(c) => certificates.push(c),
                None => {
                    return GlobalObservability { observable: false, certificates, failing_pair: Some((i, j)) }
                }
            }
        }
    }
    GlobalObservability { observable: true, certificates, failing_pair: None }
}

pub fn local_observability(game: &PmGame, neighbors: &[NeighborPair]) -> LocalObservability {
    let pairs: Vec<LocalPairResult> = neighbors
        .iter()
        .map(|n| {
            let rows = signal_rows(game, n.neighborhood.iter().copied());
            let certificate = certify(game, &rows, n.i, n.j);
            let witness = certificate.is_none().then(|| LocalWitness {
                i: n.i,
                j: n.j,
                difference: sub(game.gain_row(n.i), game.gain_row(n.j)),
                span_basis: row_space_basis(&rows.iter().map(|r| r.row.clone()).collect::<Vec<_>>()),
            });
            LocalPairResult { i: n.i, j: n.j, neighborhood: n.neighborhood.clone(), certificate, witness }
        })
        .collect();
    LocalObservability { observable: pairs.iter().all(|p| p.certificate.is_some()), pairs }
}
