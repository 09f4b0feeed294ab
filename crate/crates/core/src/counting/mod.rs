//! Exact vertex and edge counts of the cube families, by recurrence and by
//! closed form, plus the interpolated edge counts used for ratios.
//!
//! Every sequence is generic over the integer type: machine integers work
//! while values fit, [`crate::Count`] never overflows.

mod fixed;
mod real;
mod table;

pub use fixed::Fixed;
pub use real::Real;
pub use table::{
    table1, verify_table1, CellMismatch, Table1Column, Table1Verification, ROW_LABELS,
    TABLE1_GOLDEN,
};

use num_bigint::BigUint;
use num_traits::{pow, FromPrimitive, Num};

use crate::error::{Error, Result};

/// Integer types the sequences can be evaluated in.
pub trait CountInt: Clone + Num + FromPrimitive + PartialOrd {}

impl<T> CountInt for T where T: Clone + Num + FromPrimitive + PartialOrd {}

fn lit<T: CountInt>(n: usize) -> T {
    T::from_usize(n).expect("small literal fits the count type")
}

fn require_positive(name: &'static str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name,
            value: "0".into(),
            range: "1..".into(),
        });
    }
    Ok(())
}

/// `f_1 = f_2 = 1`, `f_i = f_{i-1} + f_{i-2}`.
pub fn fibonacci<T: CountInt>(n: usize) -> Result<T> {
    require_positive("n", n)?;
    let (mut a, mut b) = (T::one(), T::one());
    for _ in 2..n {
        let c = a + b.clone();
        a = b;
        b = c;
    }
    Ok(if n == 1 { a } else { b })
}

fn pow2<T: CountInt>(e: usize) -> T {
    pow(lit::<T>(2), e)
}

/// `|E(Q_n)| = n 2^(n-1)`.
pub fn edges_hypercube<T: CountInt>(n: usize) -> Result<T> {
    require_positive("n", n)?;
    Ok(lit::<T>(n) * pow2(n - 1))
}

/// `|V(F_n)| = |V(F̃_n)| = f_(n+2)`.
pub fn vertices_fibonacci<T: CountInt>(n: usize) -> Result<T> {
    require_positive("n", n)?;
    fibonacci(n + 2)
}

/// `|E(F_n)| = (2(n+1) f_n + n f_(n+1)) / 5`.
pub fn edges_fibonacci<T: CountInt>(n: usize) -> Result<T> {
    require_positive("n", n)?;
    let num = lit::<T>(2 * (n + 1)) * fibonacci::<T>(n)? + lit::<T>(n) * fibonacci::<T>(n + 1)?;
    Ok(num / lit(5))
}

/// `|E(F_1)| = 1`, `|E(F_2)| = 2`, `|E(F_n)| = |E(F_(n-1))| + |E(F_(n-2))| + f_n`.
pub fn edges_fibonacci_recurrence<T: CountInt>(n: usize) -> Result<T> {
    require_positive("n", n)?;
    let (mut older, mut newer): (T, T) = (T::one(), lit(2));
    if n == 1 {
        return Ok(older);
    }
    let (mut fa, mut fb) = (T::one(), lit::<T>(2)); // f_2, f_3
    for _ in 3..=n {
        let next = newer.clone() + older + fb.clone();
        older = newer;
        newer = next;
        let fc = fa + fb.clone();
        fa = fb;
        fb = fc;
    }
    Ok(newer)
}

/// `|E(Q̃_n)| = (3n - 1) 2^(n-2)`.
pub fn edges_tilde_hypercube<T: CountInt>(n: usize) -> Result<T> {
    require_positive("n", n)?;
    // Written as (3n - 1) 2^n / 4 so that n = 1 stays integral.
    Ok(lit::<T>(3 * n - 1) * pow2(n) / lit(4))
}

/// `|E(Q̃_1)| = 1`, `|E(Q̃_n)| = 2|E(Q̃_(n-1))| + 2^(n-1) + 2^(n-2)`.
pub fn edges_tilde_hypercube_recurrence<T: CountInt>(n: usize) -> Result<T> {
    require_positive("n", n)?;
    let mut e = T::one();
    for k in 2..=n {
        e = lit::<T>(2) * e + pow2::<T>(k - 1) + pow2::<T>(k - 2);
    }
    Ok(e)
}

/// `(n+1) f_(n+3) + (n-2) f_(n+1)`, five times `|E(F̃_n)|`. Negative only
/// for `n = 1`, where it equals 5 since `2 f_4 - f_2 = 5`.
pub fn edges_tilde_fibonacci_numerator<T: CountInt>(n: usize) -> Result<T> {
    require_positive("n", n)?;
    let plus = lit::<T>(n + 1) * fibonacci::<T>(n + 3)?;
    Ok(if n >= 2 {
        plus + lit::<T>(n - 2) * fibonacci::<T>(n + 1)?
    } else {
        plus - fibonacci::<T>(n + 1)?
    })
}

/// `|E(F̃_n)| = ((n+1) f_(n+3) + (n-2) f_(n+1)) / 5`.
pub fn edges_tilde_fibonacci<T: CountInt>(n: usize) -> Result<T> {
    Ok(edges_tilde_fibonacci_numerator::<T>(n)? / lit(5))
}

/// `|E(F̃_1)| = 1`, `|E(F̃_2)| = 3`, `|E(F̃_n)| = |E(F̃_(n-1))| + |E(F̃_(n-2))| + f_(n+1)`.
pub fn edges_tilde_fibonacci_recurrence<T: CountInt>(n: usize) -> Result<T> {
    require_positive("n", n)?;
    let (mut older, mut newer): (T, T) = (T::one(), lit(3));
    if n == 1 {
        return Ok(older);
    }
    let (mut fa, mut fb) = (lit::<T>(2), lit::<T>(3)); // f_3, f_4
    for _ in 3..=n {
        let next = newer.clone() + older + fb.clone();
        older = newer;
        newer = next;
        let fc = fa + fb.clone();
        fa = fb;
        fb = fc;
    }
    Ok(newer)
}

fn require_at_least_two<R: Real>(n_vertices: &R) -> Result<()> {
    if *n_vertices < R::from_i64(2) {
        return Err(Error::OutOfRange {
            name: "N",
            value: n_vertices.to_f64().to_string(),
            range: "[2, ∞)".into(),
        });
    }
    Ok(())
}

/// Edges of a tilde-hypercube with `N` vertices, `N (3 log2 N - 1) / 4`.
pub fn tilde_eq_interpolated<R: Real>(n_vertices: R) -> Result<R> {
    require_at_least_two(&n_vertices)?;
    let three_log = R::from_i64(3) * n_vertices.log2();
    Ok(n_vertices * (three_log - R::from_i64(1)) / R::from_i64(4))
}

/// Edges of a hypercube with `N` vertices, `N log2 N / 2`.
pub fn hypercube_eq_interpolated<R: Real>(n_vertices: R) -> Result<R> {
    require_at_least_two(&n_vertices)?;
    let log = n_vertices.log2();
    Ok(n_vertices * log / R::from_i64(2))
}

/// Edge density of the tilde-Fibonacci cube against a tilde-hypercube with
/// the same number of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ratio {
    pub order: usize,
    pub edges: BigUint,
    pub vertices: BigUint,
    pub value: crate::Precise,
}

/// `|E(F̃_n)| / ẼQ(f_(n+2))`, evaluated in [`crate::Precise`].
pub fn fibo_tilde_ratio(n: usize) -> Result<Ratio> {
    if n < 3 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n.to_string(),
            range: "3..".into(),
        });
    }
    let edges: BigUint = edges_tilde_fibonacci(n)?;
    let vertices: BigUint = vertices_fibonacci(n)?;
    let denominator = tilde_eq_interpolated(crate::Precise::from_count(&vertices))?;
    let value = crate::Precise::from_count(&edges) / denominator;
    Ok(Ratio {
        order: n,
        edges,
        vertices,
        value,
    })
}
