//! Serializable analysis report with 1-based action numbering.

use serde::{Deserialize, Serialize};

use crate::cells::{classify_actions, neighbors, ActionKind};
use crate::game::PmGame;
use crate::linalg::sub;
use crate::observability::{global_observability, local_observability, SpanCertificate};
use crate::rational::{format_rational, format_vector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub action: usize,
    pub label: String,
    pub kind: ActionKind,
    pub dimension: i64,
    pub vertices: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strictly_inside: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NeighborReport {
    pub pair: [usize; 2],
    pub dimension: i64,
    pub vertices: Vec<Vec<String>>,
    pub neighborhood: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermReport {
    pub action: usize,
    pub symbol: String,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub pair: [usize; 2],
    pub difference: Vec<String>,
    pub terms: Vec<TermReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlobalReport {
    pub observable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<[usize; 2]>,
    pub certificates: Vec<CertificateReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub pair: [usize; 2],
    pub difference: Vec<String>,
    pub span_basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalPairReport {
    pub pair: [usize; 2],
    pub neighborhood: Vec<usize>,
    pub observable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocalReport {
    pub observable: bool,
    pub pairs: Vec<LocalPairReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub actions: Vec<String>,
    pub outcomes: Vec<String>,
    pub cells: Vec<CellReport>,
    pub dominated: Vec<usize>,
    pub degenerate: Vec<usize>,
    pub pareto_optimal: Vec<usize>,
    pub neighbors: Vec<NeighborReport>,
    pub global_observability: GlobalReport,
    pub local_observability: LocalReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub golden: Option<Vec<GoldenCheck>>,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn vertices(vs: &[Vec<crate::rational::Q>]) -> Vec<Vec<String>> {
    vs.iter().map(|v| format_vector(v)).collect()
}

fn certificate(game: &PmGame, c: &SpanCertificate) -> CertificateReport {
    CertificateReport {
        pair: [c.i + 1, c.j + 1],
        difference: format_vector(&sub(game.gain_row(c.i), game.gain_row(c.j))),
        terms: c
            .terms
            .iter()
            .map(|(r, coef)| TermReport { action: r.action + 1, symbol: r.symbol.clone(), coefficient: format_rational(coef) })
            .collect(),
    }
}

/// Full analysis: classification, neighbors, global and local observability.
pub fn analyze(game: &PmGame) -> AnalysisReport {
    let classes = classify_actions(game);
    let nb = neighbors(game, &classes);
    let global = global_observability(game);
    let local = local_observability(game, &nb);
    let labels = game.action_labels();
    AnalysisReport {
        actions: labels.to_vec(),
        outcomes: game.outcome_labels().to_vec(),
        cells: classes
            .cells
            .iter()
            .map(|c| CellReport {
                action: c.action + 1,
                label: labels[c.action].clone(),
                kind: classes.kinds[c.action],
                dimension: c.dimension,
                vertices: vertices(&c.vertices),
                strictly_inside: one_based(&classes.containers[c.action]),
            })
            .collect(),
        dominated: one_based(&classes.of_kind(ActionKind::Dominated)),
        degenerate: one_based(&classes.of_kind(ActionKind::Degenerate)),
        pareto_optimal: one_based(&classes.of_kind(ActionKind::ParetoOptimal)),
        neighbors: nb
            .iter()
            .map(|n| NeighborReport {
                pair: [n.i + 1, n.j + 1],
                dimension: n.dimension,
                vertices: vertices(&n.vertices),
                neighborhood: one_based(&n.neighborhood),
            })
            .collect(),
        global_observability: GlobalReport {
            observable: global.observable,
            failing_pair: global.failing_pair.map(|(i, j)| [i + 1, j + 1]),
            certificates: global.certificates.iter().map(|c| certificate(game, c)).collect(),
        },
        local_observability: LocalReport {
            observable: local.observable,
            pairs: local
                .pairs
                .iter()
                .map(|p| LocalPairReport {
                    pair: [p.i + 1, p.j + 1],
                    neighborhood: one_based(&p.neighborhood),
                    observable: p.certificate.is_some(),
                    certificate: p.certificate.as_ref().map(|c| certificate(game, c)),
                    witness: p.witness.as_ref().map(|w| WitnessReport {
                        pair: [w.i + 1, w.j + 1],
                        difference: format_vector(&w.difference),
                        span_basis: vertices(&w.span_basis),
                    }),
                })
                .collect(),
        },
        golden: None,
    }
}

fn check(name: &str, expected: String, actual: String) -> GoldenCheck {
    GoldenCheck { name: name.into(), pass: expected == actual, expected, actual }
}

/// Compares a report of the bilateral trade game with its known structure.
pub fn bilateral_trade_golden(r: &AnalysisReport) -> Vec<GoldenCheck> {
    let witness = r
        .local_observability
        .pairs
        .iter()
        .find_map(|p| p.witness.as_ref())
        .map_or_else(|| "none".to_string(), |w| format!("{:?} {}", w.pair, w.difference.join(",")));
    vec![
        check("dominated", "[3, 4, 6, 7]".into(), format!("{:?}", r.dominated)),
        check("degenerate", "[1, 2, 9, 10]".into(), format!("{:?}", r.degenerate)),
        check("pareto-optimal", "[5, 8]".into(), format!("{:?}", r.pareto_optimal)),
        check(
            "neighbors",
            "[([5, 8], 2, [5, 8])]".into(),
            format!("{:?}", r.neighbors.iter().map(|n| (n.pair, n.dimension, n.neighborhood.clone())).collect::<Vec<_>>()),
        ),
        check("global observability", "true".into(), r.global_observability.observable.to_string()),
        check("local observability", "false".into(), r.local_observability.observable.to_string()),
        check("local witness", "[5, 8] 1/2,1/6,-1/6,-1/2".into(), witness),
    ]
}
