//! Small dense linear-algebra helpers used by the pointwise checks.
//! Dimensions here are tiny (<= 7), so everything is plain Gaussian
//! elimination and Gram-Schmidt on `Vec`s.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::expr::{Complex, Evaluator, Expr};
use crate::fields::{MetricField, Tensor11, VectorField};

pub fn eval_vf(ev: &mut Evaluator, v: &VectorField) -> Result<Vec<Complex>> {
    v.comps.iter().map(|c| Ok(ev.eval(c)?)).collect()
}

pub fn eval_matrix(ev: &mut Evaluator, m: &[Vec<Expr>]) -> Result<Vec<Vec<Complex>>> {
    m.iter()
        .map(|row| row.iter().map(|e| Ok(ev.eval(e)?)).collect())
        .collect()
}

pub fn eval_tensor(ev: &mut Evaluator, t: &Tensor11) -> Result<Vec<Vec<Complex>>> {
    eval_matrix(ev, &t.m)
}

pub fn eval_metric(ev: &mut Evaluator, g: &MetricField) -> Result<Vec<Vec<Complex>>> {
    eval_matrix(ev, &g.m)
}

pub fn mat_vec(m: &[Vec<Complex>], v: &[Complex]) -> Vec<Complex> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn vec_norm(v: &[Complex]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Bilinear (no conjugation) metric pairing of numeric vectors.
pub fn g_inner(g: &[Vec<Complex>], x: &[Complex], y: &[Complex]) -> Complex {
    let mut acc = Complex::new(0.0, 0.0);
    for (i, row) in g.iter().enumerate() {
        for (j, gij) in row.iter().enumerate() {
            acc += gij * x[i] * y[j];
        }
    }
    acc
}

/// Solve `A x = b` by Gaussian elimination with partial pivoting.
#[cfg_attr(not(test), allow(dead_code))]
pub fn solve(a: &[Vec<Complex>], b: &[Complex], point: &[f64]) -> Result<Vec<Complex>> {
    let n = a.len();
    let mut m: Vec<Vec<Complex>> = a.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (pivot, mag) = (col..n)
            .map(|r| (r, m[r][col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag < 1e-13 {
            return Err(Error::SingularMetric {
                point: point.to_vec(),
            });
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in (col + 1)..n {
            let f = m[r][col] / m[col][col];
            for c in col..n {
                let v = m[col][c];
                m[r][c] -= f * v;
            }
            let v = rhs[col];
            rhs[r] -= f * v;
        }
    }
    let mut x = vec![Complex::new(0.0, 0.0); n];
    for r in (0..n).rev() {
        let mut acc = rhs[r];
        for c in (r + 1)..n {
            acc -= m[r][c] * x[c];
        }
        x[r] = acc / m[r][r];
    }
    Ok(x)
}

/// Real symmetric positive-definiteness probe via Cholesky.
pub fn is_positive_definite(g: &[Vec<Complex>]) -> bool {
    let n = g.len();
    let mut l = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..=i {
            if g[i][j].im.abs() > 1e-9 {
                return false;
            }
            let mut s = g[i][j].re;
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                if s <= 0.0 {
                    return false;
                }
                l[i][j] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    true
}

/// Gram-Schmidt an ordered list of real vectors against a (real) metric,
/// dropping vectors that are dependent on earlier ones.  Returns a
/// g-orthonormal basis of the span, in input order.
pub fn gram_schmidt(g: &[Vec<Complex>], vectors: &[Vec<Complex>], point: &[f64]) -> Result<Vec<Vec<Complex>>> {
    let mut basis: Vec<Vec<Complex>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for e in &basis {
            let c = g_inner(g, &w, e);
            for (wk, ek) in w.iter_mut().zip(e) {
                *wk -= c * ek;
            }
        }
        let nsq = g_inner(g, &w, &w);
        if nsq.re < 0.0 && nsq.re.abs() > 1e-10 {
            return Err(Error::NotPositiveDefinite {
                point: point.to_vec(),
            });
        }
        if nsq.re.abs() < 1e-16 {
            continue; // dependent direction
        }
        let inv = Complex::new(1.0 / nsq.re.sqrt(), 0.0);
        for wk in w.iter_mut() {
            *wk *= inv;
        }
        basis.push(w);
    }
    Ok(basis)
}

/// Minimal-norm least squares for a small real symmetric system built
/// from normal equations, with rank reporting.  `m c = rhs`; columns
/// whose pivot falls below `tol` are flagged undetermined and forced to 0.
pub struct SmallLsq {
    pub solution: Vec<f64>,
    pub determined: Vec<bool>,
}

pub fn solve_normal_equations(m: &[Vec<f64>], rhs: &[f64], tol: f64) -> SmallLsq {
    let n = m.len();
    // Gaussian elimination with full symmetric pivoting on the diagonal.
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut b = rhs.to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    let mut determined = vec![true; n];
    let scale = a
        .iter()
        .enumerate()
        .map(|(i, row)| row[i].abs())
        .fold(0.0f64, f64::max)
        .max(1.0);
    for step in 0..n {
        // pick remaining variable with the largest diagonal entry
        let (best, mag) = (step..n)
            .map(|k| (k, a[k][k].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if mag < tol * scale {
            for k in step..n {
                determined[order[k]] = false;
            }
            break;
        }
        // swap rows and columns to bring the pivot to position `step`
        a.swap(step, best);
        b.swap(step, best);
        order.swap(step, best);
        for row in a.iter_mut() {
            row.swap(step, best);
        }
        for r in (step + 1)..n {
            let f = a[r][step] / a[step][step];
            for c in step..n {
                a[r][c] -= f * a[step][c];
            }
            b[r] -= f * b[step];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        if !determined[order[r]] {
            continue;
        }
        let mut acc = b[r];
        for c in (r + 1)..n {
            acc -= a[r][c] * x[c];
        }
        x[r] = acc / a[r][r];
    }
    // undo the permutation
    let mut solution = vec![0.0; n];
    for (slot, &var) in order.iter().enumerate() {
        solution[var] = x[slot];
    }
    SmallLsq {
        solution,
        determined,
    }
}

/// Convenience: evaluate a vector field at a point with no parameters.
pub fn eval_vf_at(v: &VectorField, point: &[f64], params: &HashMap<String, f64>) -> Result<Vec<Complex>> {
    let mut ev = Evaluator::new(point, params);
    eval_vf(&mut ev, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: f64) -> Complex {
        Complex::new(v, 0.0)
    }

    #[test]
    fn solve_small_system() {
        let a = vec![vec![c(2.0), c(1.0)], vec![c(1.0), c(3.0)]];
        let b = vec![c(5.0), c(10.0)];
        let x = solve(&a, &b, &[]).unwrap();
        assert!((x[0] - c(1.0)).norm() < 1e-12);
        assert!((x[1] - c(3.0)).norm() < 1e-12);
    }

    #[test]
    fn cholesky_detects_indefinite() {
        let good = vec![vec![c(2.0), c(0.0)], vec![c(0.0), c(1.0)]];
        let bad = vec![vec![c(1.0), c(2.0)], vec![c(2.0), c(1.0)]];
        assert!(is_positive_definite(&good));
        assert!(!is_positive_definite(&bad));
    }

    #[test]
    fn normal_equations_rank_deficient() {
        // second unknown completely absent
        let m = vec![vec![4.0, 0.0], vec![0.0, 0.0]];
        let rhs = vec![8.0, 0.0];
        let out = solve_normal_equations(&m, &rhs, 1e-10);
        assert_eq!(out.solution[0], 2.0);
        assert!(out.determined[0]);
        assert!(!out.determined[1]);
        assert_eq!(out.solution[1], 0.0);
    }
}
