//! Sequential or data-parallel evaluation of polynomial sums.
//!
//! Every sum routed through here is a commutative reduction over exact
//! integer polynomials, so the result is bit-identical in both modes.

use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is on, and falls back
    /// to sequential evaluation otherwise.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// `Σ f(item)` over a slice.
pub fn sum_over<T, F>(items: &[T], exec: Exec, f: F) -> Poly
where
    T: Sync,
    F: Fn(&T) -> Poly + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).reduce(Poly::zero, |mut a, b| {
                a += b;
                a
            })
        }
        _ => items.iter().map(f).sum(),
    }
}

/// `Σ f(i)` for `i` in `0..n`.
pub fn sum_range<F>(n: usize, exec: Exec, f: F) -> Poly
where
    F: Fn(usize) -> Poly + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..n)
                .into_par_iter()
                .map(f)
                .reduce(Poly::zero, |mut a, b| {
                    a += b;
                    a
                })
        }
        _ => (0..n).map(f).sum(),
    }
}

/// Runs `f` on every item and keeps the first error in item order.
pub fn try_all<T, E, F>(items: &[T], exec: Exec, f: F) -> Result<(), E>
where
    T: Sync,
    E: Send,
    F: Fn(&T) -> Result<(), E> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            let mut errs: Vec<(usize, E)> = items
                .par_iter()
                .enumerate()
                .filter_map(|(i, x)| f(x).err().map(|e| (i, e)))
                .collect();
            errs.sort_by_key(|(i, _)| *i);
            match errs.into_iter().next() {
                Some((_, e)) => Err(e),
                None => Ok(()),
            }
        }
        _ => items.iter().try_for_each(f),
    }
}
