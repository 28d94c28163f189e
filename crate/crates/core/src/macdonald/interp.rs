//! Exact polynomial interpolation on tensor grids.

use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::{MPoly, Monomial, Var};

/// Monomial coefficients of the polynomial of degree `< xs.len()` through
/// the points `(xs[i], ys[i])`. The nodes must be distinct.
pub fn interpolate_1d(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    assert_eq!(n, ys.len());
    // divided differences
    let mut dd: Vec<BigRational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // expand the Newton form by Horner's scheme
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs ← coeffs · (x − xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for d in 0..n - 1 {
            if coeffs[d].is_zero() {
                continue;
            }
            next[d + 1] += &coeffs[d];
            next[d] -= &coeffs[d] * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// Polynomial in `x`, `y` of degree `< xs.len()` in `x` and `< ys.len()` in
/// `y` taking the values `vals[i][j]` at `(xs[i], ys[j])`.
pub fn interpolate_2d(
    xs: &[BigRational],
    ys: &[BigRational],
    vals: &[Vec<BigRational>],
    x: Var,
    y: Var,
) -> MPoly {
    // interpolate in x for every fixed y, then each x-coefficient in y
    let per_y: Vec<Vec<BigRational>> = (0..ys.len())
        .map(|j| {
            let col: Vec<BigRational> = (0..xs.len()).map(|i| vals[i][j].clone()).collect();
            interpolate_1d(xs, &col)
        })
        .collect();
    let mut out = MPoly::zero();
    for a in 0..xs.len() {
        let along: Vec<BigRational> = per_y.iter().map(|c| c[a].clone()).collect();
        if along.iter().all(Zero::is_zero) {
            continue;
        }
        for (b, c) in interpolate_1d(ys, &along).into_iter().enumerate() {
            out.add_term(Monomial::new(&[(x, a as u32), (y, b as u32)]), c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn recovers_univariate() {
        let xs: Vec<_> = [2, -3, 5, 7].iter().map(|&x| rat(x)).collect();
        let ys: Vec<_> = xs.iter().map(|x| x * x * x - rat(2) * x + rat(1)).collect();
        assert_eq!(
            interpolate_1d(&xs, &ys),
            vec![rat(1), rat(-2), rat(0), rat(1)]
        );
    }

    #[test]
    fn recovers_bivariate() {
        let p: MPoly = "q^3*t - 2*q*t^2 + 5 - t^3".parse().unwrap();
        let xs: Vec<_> = [2, -2, 5, -5].iter().map(|&x| rat(x)).collect();
        let ys: Vec<_> = [3, -3, 7, -7].iter().map(|&x| rat(x)).collect();
        let vals: Vec<Vec<BigRational>> = xs
            .iter()
            .map(|x| {
                ys.iter()
                    .map(|y| p.eval(|v| if v == Var::Q { x.clone() } else { y.clone() }))
                    .collect()
            })
            .collect();
        assert_eq!(interpolate_2d(&xs, &ys, &vals, Var::Q, Var::T), p);
    }
}
