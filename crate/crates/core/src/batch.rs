//! Certification and verification over many independent inputs.
//!
//! With the `parallel` feature the work is spread over the rayon pool;
//! without it, or with [`Execution::Sequential`], items run in order on the
//! calling thread. Output order always matches input order.

use crate::error::Result;
use crate::matrix::Matrix;
use crate::reality::{
    skew_reverser, strong_reverser, verify_with_structure, Checks, ReverserCertificate,
    StrongOutcome,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether [`Execution::Parallel`] actually runs on a thread pool in this
    /// build.
    pub const PARALLEL_AVAILABLE: bool = cfg!(feature = "parallel");
}

/// Maps `f` over `items`, in parallel when requested and available.
pub fn map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        Execution::Parallel => parallel_map(items, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

pub fn skew_reversers(xs: &[Matrix], exec: Execution) -> Vec<Result<ReverserCertificate>> {
    map(xs, exec, skew_reverser)
}

pub fn strong_reversers(xs: &[Matrix], exec: Execution) -> Vec<Result<StrongOutcome>> {
    map(xs, exec, strong_reverser)
}

/// Re-derives every check of every certificate from scratch.
pub fn verify_certificates(certs: &[ReverserCertificate], exec: Execution) -> Vec<Result<Checks>> {
    map(certs, exec, |c| {
        verify_with_structure(&c.subject, &c.reverser, c.kind, c.structure)
    })
}
