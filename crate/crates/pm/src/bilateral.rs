//! The ten-action, four-outcome bilateral trade game with two-bit feedback.

use crate::game::PmGame;
use crate::rational::{format_rational, q, Q};

/// Representative seller/buyer prices; each stands for an interval of
/// prices that share gain and feedback against every outcome.
pub fn representative_prices() -> Vec<Q> {
    vec![q(0, 1), q(1, 3), q(2, 3), q(1, 1)]
}

/// Actions `(p, q)` with `p <= q`, in lexicographic order.
pub fn actions() -> Vec<(Q, Q)> {
    let prices = representative_prices();
    let mut out = Vec::new();
    for (a, p) in prices.iter().enumerate() {
        for qq in &prices[a..] {
            out.push((p.clone(), qq.clone()));
        }
    }
    out
}

/// Valuation outcomes `(s, b)`.
pub fn outcomes() -> Vec<(Q, Q)> {
    vec![(q(0, 1), q(1, 2)), (q(1, 3), q(1, 2)), (q(1, 2), q(2, 3)), (q(1, 2), q(1, 1))]
}

fn label((a, b): &(Q, Q)) -> String {
    format!("({},{})", format_rational(a), format_rational(b))
}

/// Gain `(b - s) 1{s <= p <= q <= b}` and feedback `(1{s <= p}, 1{q <= b})`.
pub fn bilateral_trade_game() -> PmGame {
    let acts = actions();
    let outs = outcomes();
    let gain = acts
        .iter()
        .map(|(p, qq)| {
            outs.iter()
                .map(|(s, b)| if s <= p && p <= qq && qq <= b { b - s } else { q(0, 1) })
                .collect()
        })
        .collect();
    let feedback = acts
        .iter()
        .map(|(p, qq)| {
            outs.iter()
                .map(|(s, b)| format!("{}{}", u8::from(s <= p), u8::from(qq <= b)))
                .collect()
        })
        .collect();
    PmGame::with_labels(gain, feedback, acts.iter().map(label).collect(), outs.iter().map(label).collect())
        .expect("builtin game is well formed")
}
