//! Evaluation, compilation and synthesis of Digraph placement games.
//!
//! On a two-coloured digraph, Left deletes a blue vertex together with its
//! out-neighbours, Right does the same with a red vertex, and a player who
//! cannot move loses. This crate provides
//!
//! * [`value`]: hash-consed short partizan games and their algebra,
//! * [`digraph`]: positions, residuals and their values,
//! * [`conflict`]: conflict placement games and their compilation to digraphs,
//! * [`synth`]: construction of a digraph equal to any given value,
//! * [`census`]: exhaustive enumeration of small digraphs and extremal bounds,
//! * [`expr`]: the textual value notation used by the command line.

pub mod census;
pub mod conflict;
pub mod digraph;
pub mod expr;
pub mod fixtures;
pub mod synth;
pub mod value;

pub use digraph::{Color, DigraphGame, Residual};
pub use value::{Dyadic, Game, OutcomeClass, Player, Relation};

use std::sync::OnceLock;

/// Memo memory cap from `DIPLACE_MEMO_LIMIT_MB` (default 1024 MiB).
pub fn memo_limit_bytes() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("DIPLACE_MEMO_LIMIT_MB")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(1024)
            .saturating_mul(1 << 20)
    })
}
