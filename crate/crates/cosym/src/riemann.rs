//! Levi-Civita connection, curvature and pointwise tensor norms, derived
//! symbolically from a metric.
//!
//! The metric inverse is computed once by cofactor expansion with a
//! memoized minor table, so the determinant and all adjugate entries are
//! shared nodes of one DAG.  Christoffel symbols and curvature components
//! are then ordinary expressions; all identity checks evaluate them
//! pointwise.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::{Complex, Differentiator, Evaluator, Expr};
use crate::fields::{ChartDecl, MetricField, Tensor11, VectorField};
use crate::numeric;

/// Largest dimension for which symbolic cofactor inversion is attempted
/// (n <= 3).
pub const MAX_SYMBOLIC_DIM: usize = 7;

/// Determinant of the submatrix selected by `rowmask`/`colmask`, memoized.
fn det_sub(
    m: &[Vec<Expr>],
    rowmask: u32,
    colmask: u32,
    memo: &mut HashMap<(u32, u32), Expr>,
) -> Expr {
    if rowmask == 0 {
        return Expr::one();
    }
    if let Some(d) = memo.get(&(rowmask, colmask)) {
        return d.clone();
    }
    let row = rowmask.trailing_zeros() as usize;
    let rest_rows = rowmask & !(1 << row);
    let mut terms = Vec::new();
    let mut sign = 1.0;
    for col in 0..m.len() {
        if colmask & (1 << col) == 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let minor = det_sub(m, rest_rows, colmask & !(1 << col), memo);
            terms.push(Expr::num(sign) * entry.clone() * minor);
        }
        sign = -sign;
    }
    let d = Expr::sum(terms);
    memo.insert((rowmask, colmask), d);
    memo[&(rowmask, colmask)].clone()
}

/// Symbolic inverse of a square matrix of expressions via the adjugate.
/// Returns `(inverse, det)`; all entries share one minor DAG.
pub fn invert_symbolic(m: &[Vec<Expr>]) -> Result<(Vec<Vec<Expr>>, Expr)> {
    let dim = m.len();
    if dim > MAX_SYMBOLIC_DIM {
        return Err(Error::DimensionTooLarge {
            got: dim,
            max: MAX_SYMBOLIC_DIM,
        });
    }
    let full: u32 = (1u32 << dim) - 1;
    let mut memo = HashMap::new();
    let det = det_sub(m, full, full, &mut memo);
    let mut inv = vec![vec![Expr::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            // inv[i][j] = (-1)^{i+j} * minor(del row j, col i) / det
            let minor = det_sub(m, full & !(1 << j), full & !(1 << i), &mut memo);
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            inv[i][j] = Expr::quot(Expr::num(sign) * minor, det.clone());
        }
    }
    Ok((inv, det))
}

/// Contravariant metric `g^{ij}`.
pub fn inverse_metric(g: &MetricField) -> Result<MetricField> {
    let (inv, _) = invert_symbolic(&g.m)?;
    MetricField::new(g.chart.clone(), inv)
}

/// Christoffel symbols of the Levi-Civita connection of a metric.
#[derive(Clone, Debug)]
pub struct ConnectionData {
    pub chart: Arc<ChartDecl>,
    pub metric: MetricField,
    /// `gamma[k][i][j]`, symmetric in (i, j) by shared storage.
    pub gamma: Vec<Vec<Vec<Expr>>>,
}

/// `Gamma^k_{ij} = g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij}) / 2`.
pub fn christoffel(g: &MetricField) -> Result<ConnectionData> {
    let chart = g.chart.clone();
    let dim = chart.dim();
    let (inv, _) = invert_symbolic(&g.m)?;
    // dg[l][i][j] = d_l g_{ij}
    let mut dg = Vec::with_capacity(dim);
    for l in 0..dim {
        let mut d = Differentiator::new(l);
        dg.push(
            g.m.iter()
                .map(|row| row.iter().map(|e| d.diff(e)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        );
    }
    let mut gamma = vec![vec![vec![Expr::zero(); dim]; dim]; dim];
    for k in 0..dim {
        for i in 0..dim {
            for j in i..dim {
                let mut terms = Vec::with_capacity(dim);
                for l in 0..dim {
                    if inv[k][l].is_zero() {
                        continue;
                    }
                    let bracket = dg[i][j][l].clone() + dg[j][i][l].clone()
                        - dg[l][i][j].clone();
                    if bracket.is_zero() {
                        continue;
                    }
                    terms.push(inv[k][l].clone() * bracket);
                }
                let sym = Expr::num(0.5) * Expr::sum(terms);
                gamma[k][i][j] = sym.clone();
                gamma[k][j][i] = sym;
            }
        }
    }
    Ok(ConnectionData {
        chart,
        metric: g.clone(),
        gamma,
    })
}

/// Curvature components `R(d_i, d_j) d_k = riem[l][i][j][k] d_l`.
#[derive(Clone, Debug)]
pub struct CurvatureData {
    pub chart: Arc<ChartDecl>,
    pub riem: Vec<Vec<Vec<Vec<Expr>>>>,
}

pub fn curvature(conn: &ConnectionData) -> CurvatureData {
    let chart = conn.chart.clone();
    let dim = chart.dim();
    // dgamma[i][l][j][k] = d_i Gamma^l_{jk}
    let mut dgamma = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut d = Differentiator::new(i);
        dgamma.push(
            conn.gamma
                .iter()
                .map(|a| {
                    a.iter()
                        .map(|b| b.iter().map(|e| d.diff(e)).collect::<Vec<_>>())
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        );
    }
    let mut riem = vec![vec![vec![vec![Expr::zero(); dim]; dim]; dim]; dim];
    for l in 0..dim {
        for i in 0..dim {
            for j in (i + 1)..dim {
                for k in 0..dim {
                    let mut terms = vec![
                        dgamma[i][l][j][k].clone(),
                        Expr::neg(dgamma[j][l][i][k].clone()),
                    ];
                    for m in 0..dim {
                        let a = conn.gamma[l][i][m].clone() * conn.gamma[m][j][k].clone();
                        let b = conn.gamma[l][j][m].clone() * conn.gamma[m][i][k].clone();
                        terms.push(a);
                        terms.push(Expr::neg(b));
                    }
                    let r = Expr::sum(terms);
                    riem[l][i][j][k] = r.clone();
                    riem[l][j][i][k] = Expr::neg(r);
                }
            }
        }
    }
    CurvatureData { chart, riem }
}

/// `(nabla_X Y)^k = X^i (d_i Y^k + Gamma^k_{ij} Y^j)`; complex-linear in
/// the components of `Y`.
pub fn covariant_derivative_vf(
    conn: &ConnectionData,
    x: &VectorField,
    y: &VectorField,
) -> Result<VectorField> {
    if conn.chart != x.chart || conn.chart != y.chart {
        return Err(Error::ChartMismatch);
    }
    let dim = conn.chart.dim();
    // dy[i][k] = d_i Y^k
    let mut dy = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut d = Differentiator::new(i);
        dy.push(y.comps.iter().map(|c| d.diff(c)).collect::<Vec<_>>());
    }
    let comps = (0..dim)
        .map(|k| {
            let mut terms = Vec::new();
            for i in 0..dim {
                if x.comps[i].is_zero() {
                    continue;
                }
                let mut inner = vec![dy[i][k].clone()];
                for j in 0..dim {
                    inner.push(conn.gamma[k][i][j].clone() * y.comps[j].clone());
                }
                terms.push(x.comps[i].clone() * Expr::sum(inner));
            }
            Expr::sum(terms)
        })
        .collect();
    Ok(VectorField {
        chart: conn.chart.clone(),
        comps,
    })
}

/// `(nabla_X T) Y = nabla_X (T Y) - T (nabla_X Y)` on basis columns.
pub fn covariant_derivative_t11(
    conn: &ConnectionData,
    x: &VectorField,
    t: &Tensor11,
) -> Result<Tensor11> {
    if conn.chart != t.chart {
        return Err(Error::ChartMismatch);
    }
    let chart = conn.chart.clone();
    let dim = chart.dim();
    let mut cols = Vec::with_capacity(dim);
    for j in 0..dim {
        let ej = VectorField::coordinate(chart.clone(), j);
        let a = covariant_derivative_vf(conn, x, &t.column(j))?;
        let b = t.apply(&covariant_derivative_vf(conn, x, &ej)?)?;
        cols.push(a.sub(&b));
    }
    Ok(Tensor11::from_columns(chart, cols))
}

/// Value of `R(X, Y) Z` at a point, by contracting the symbolic curvature
/// components with the field components.
pub fn curvature_apply(
    curv: &CurvatureData,
    x: &VectorField,
    y: &VectorField,
    z: &VectorField,
    point: &[f64],
    params: &HashMap<String, f64>,
) -> Result<Vec<Complex>> {
    let dim = curv.chart.dim();
    let mut ev = Evaluator::new(point, params);
    let xv = numeric::eval_vf(&mut ev, x)?;
    let yv = numeric::eval_vf(&mut ev, y)?;
    let zv = numeric::eval_vf(&mut ev, z)?;
    let mut out = vec![Complex::new(0.0, 0.0); dim];
    for l in 0..dim {
        for i in 0..dim {
            if xv[i].norm() == 0.0 {
                continue;
            }
            for j in 0..dim {
                if i == j || yv[j].norm() == 0.0 {
                    continue;
                }
                for k in 0..dim {
                    if zv[k].norm() == 0.0 {
                        continue;
                    }
                    let r = ev.eval(&curv.riem[l][i][j][k])?;
                    out[l] += r * xv[i] * yv[j] * zv[k];
                }
            }
        }
    }
    Ok(out)
}

/// Curvature components evaluated at a point: `r[l][i][j][k]`.
pub fn curvature_at(
    curv: &CurvatureData,
    point: &[f64],
    params: &HashMap<String, f64>,
) -> Result<Vec<Vec<Vec<Vec<Complex>>>>> {
    let dim = curv.chart.dim();
    let mut ev = Evaluator::new(point, params);
    let mut out = vec![vec![vec![vec![Complex::new(0.0, 0.0); dim]; dim]; dim]; dim];
    for l in 0..dim {
        for i in 0..dim {
            for j in 0..dim {
                if i == j {
                    continue;
                }
                for k in 0..dim {
                    out[l][i][j][k] = ev.eval(&curv.riem[l][i][j][k])?;
                }
            }
        }
    }
    Ok(out)
}

/// A g-orthonormal basis of the whole tangent space at `point`, built by
/// Gram-Schmidt on the coordinate basis in chart order (t first).
pub fn orthonormal_basis(
    g: &MetricField,
    point: &[f64],
    params: &HashMap<String, f64>,
) -> Result<Vec<Vec<Complex>>> {
    let dim = g.chart.dim();
    let mut ev = Evaluator::new(point, params);
    let gm = numeric::eval_metric(&mut ev, g)?;
    if !numeric::is_positive_definite(&gm) {
        return Err(Error::NotPositiveDefinite {
            point: point.to_vec(),
        });
    }
    let basis: Vec<Vec<Complex>> = (0..dim)
        .map(|k| {
            (0..dim)
                .map(|j| Complex::new(if j == k { 1.0 } else { 0.0 }, 0.0))
                .collect()
        })
        .collect();
    numeric::gram_schmidt(&gm, &basis, point)
}

/// Frobenius-type norm `||T|| = sqrt(sum_a g(T e_a, T e_a))` over a
/// g-orthonormal basis at `point`.
pub fn tensor_norm(
    g: &MetricField,
    t: &Tensor11,
    point: &[f64],
    params: &HashMap<String, f64>,
) -> Result<f64> {
    let basis = orthonormal_basis(g, point, params)?;
    let mut ev = Evaluator::new(point, params);
    let gm = numeric::eval_metric(&mut ev, g)?;
    let tm = numeric::eval_tensor(&mut ev, t)?;
    let mut acc = 0.0;
    for e in &basis {
        let te = numeric::mat_vec(&tm, e);
        acc += numeric::g_inner(&gm, &te, &te).re;
    }
    Ok(acc.max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Sample;
    use rand::{Rng as _, SeedableRng};

    fn no_params() -> HashMap<String, f64> {
        HashMap::new()
    }

    fn chart1() -> Arc<ChartDecl> {
        Arc::new(ChartDecl::standard(1, (-0.8, 0.8)))
    }

    /// The mu = 0, n = 1 model metric dt^2 + e^{-2t} dx^2 + e^{2t} dy^2.
    fn model_metric() -> MetricField {
        let c = chart1();
        let e2t = Expr::exp(Expr::num(2.0) * Expr::var(0));
        let em2t = Expr::exp(Expr::num(-2.0) * Expr::var(0));
        MetricField::new(
            c,
            vec![
                vec![Expr::one(), Expr::zero(), Expr::zero()],
                vec![Expr::zero(), em2t, Expr::zero()],
                vec![Expr::zero(), Expr::zero(), e2t],
            ],
        )
        .unwrap()
    }

    #[test]
    fn identity_metric_inverts_to_identity() {
        let g = MetricField::euclidean(chart1());
        let inv = inverse_metric(&g).unwrap();
        for (i, row) in inv.m.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let v = e.eval(&[0.1, 0.2, 0.3], &no_params()).unwrap();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((v.re - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn diagonal_metric_inverse() {
        let g = model_metric();
        let inv = inverse_metric(&g).unwrap();
        let p = [0.37, 0.0, 0.0];
        let v11 = inv.m[1][1].eval(&p, &no_params()).unwrap();
        let v22 = inv.m[2][2].eval(&p, &no_params()).unwrap();
        assert!((v11.re - f64::exp(2.0 * 0.37)).abs() < 1e-12);
        assert!((v22.re - f64::exp(-2.0 * 0.37)).abs() < 1e-12);
    }

    #[test]
    fn random_spd_inverse_matches_numeric_solve() {
        // constant SPD 5x5: A^T A + 5 I, checked against Gaussian solve
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let dim = 5;
        let a: Vec<Vec<f64>> = (0..dim)
            .map(|_| (0..dim).map(|_| rng.gen::<f64>() - 0.5).collect())
            .collect();
        let mut spd = vec![vec![0.0; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    spd[i][j] += a[k][i] * a[k][j];
                }
                if i == j {
                    spd[i][j] += 5.0;
                }
            }
        }
        let chart = Arc::new(ChartDecl::standard(2, (-0.8, 0.8)));
        let g = MetricField::new(
            chart,
            spd.iter()
                .map(|row| row.iter().map(|&v| Expr::num(v)).collect())
                .collect(),
        )
        .unwrap();
        let inv = inverse_metric(&g).unwrap();
        let gm: Vec<Vec<Complex>> = spd
            .iter()
            .map(|row| row.iter().map(|&v| Complex::new(v, 0.0)).collect())
            .collect();
        let p = [0.0; 5];
        for j in 0..dim {
            let mut e = vec![Complex::new(0.0, 0.0); dim];
            e[j] = Complex::new(1.0, 0.0);
            let col = numeric::solve(&gm, &e, &p).unwrap();
            for i in 0..dim {
                let sym = inv.m[i][j].eval(&p, &no_params()).unwrap();
                assert!(
                    (sym - col[i]).norm() < 1e-10,
                    "entry ({i},{j}): {sym} vs {}",
                    col[i]
                );
            }
        }
    }

    #[test]
    fn flat_metric_has_zero_christoffel() {
        let conn = christoffel(&MetricField::euclidean(chart1())).unwrap();
        for a in &conn.gamma {
            for b in a {
                for e in b {
                    assert!(e.is_zero());
                }
            }
        }
    }

    #[test]
    fn model_christoffel_golden_values() {
        // Gamma^x_{tx} = -1, Gamma^y_{ty} = +1, Gamma^t_{xx} = e^{-2t}
        let conn = christoffel(&model_metric()).unwrap();
        let p = [0.42, 0.1, -0.3];
        let gxtx = conn.gamma[1][0][1].eval(&p, &no_params()).unwrap();
        let gyty = conn.gamma[2][0][2].eval(&p, &no_params()).unwrap();
        let gtxx = conn.gamma[0][1][1].eval(&p, &no_params()).unwrap();
        assert!((gxtx.re + 1.0).abs() < 1e-12);
        assert!((gyty.re - 1.0).abs() < 1e-12);
        assert!((gtxx.re - f64::exp(-2.0 * 0.42)).abs() < 1e-12);
    }

    #[test]
    fn christoffel_symmetric_for_random_metric() {
        let c = chart1();
        // a curved but positive metric
        let f = Expr::exp(Expr::num(0.3) * Expr::var(1));
        let g = MetricField::new(
            c,
            vec![
                vec![Expr::one() + Expr::int_pow(Expr::var(2), 2), Expr::num(0.2) * Expr::var(0), Expr::zero()],
                vec![Expr::num(0.2) * Expr::var(0), f.clone(), Expr::zero()],
                vec![Expr::zero(), Expr::zero(), f],
            ],
        )
        .unwrap();
        let conn = christoffel(&g).unwrap();
        let p = [0.2, -0.4, 0.6];
        for k in 0..3 {
            for i in 0..3 {
                for j in 0..3 {
                    let a = conn.gamma[k][i][j].eval(&p, &no_params()).unwrap();
                    let b = conn.gamma[k][j][i].eval(&p, &no_params()).unwrap();
                    assert!((a - b).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn metric_compatibility_at_sample_points() {
        // d_k g(Y, Z) = g(nabla_k Y, Z) + g(Y, nabla_k Z) on basis fields
        let g = model_metric();
        let conn = christoffel(&g).unwrap();
        let chart = g.chart.clone();
        let sample = Sample::draw(&chart, 11, 20);
        for p in &sample.points {
            for k in 0..3 {
                let ek = VectorField::coordinate(chart.clone(), k);
                for a in 0..3 {
                    for b in 0..3 {
                        let ea = VectorField::coordinate(chart.clone(), a);
                        let eb = VectorField::coordinate(chart.clone(), b);
                        let lhs = g.m[a][b].differentiate(k);
                        let rhs = g
                            .inner(&covariant_derivative_vf(&conn, &ek, &ea).unwrap(), &eb)
                            .unwrap()
                            + g.inner(&ea, &covariant_derivative_vf(&conn, &ek, &eb).unwrap())
                                .unwrap();
                        let d = (lhs.eval(p, &no_params()).unwrap()
                            - rhs.eval(p, &no_params()).unwrap())
                        .norm();
                        assert!(d < 1e-9, "compat residual {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn covariant_derivative_leibniz() {
        let g = model_metric();
        let conn = christoffel(&g).unwrap();
        let chart = g.chart.clone();
        let f = Expr::sin(Expr::var(1)) + Expr::var(0);
        let x = VectorField::new(
            chart.clone(),
            vec![Expr::one(), Expr::var(2), Expr::var(0)],
        )
        .unwrap();
        let y = VectorField::new(
            chart.clone(),
            vec![Expr::var(1), Expr::one(), Expr::cos(Expr::var(0))],
        )
        .unwrap();
        let lhs = covariant_derivative_vf(&conn, &x, &y.scale(f.clone())).unwrap();
        let rhs = y
            .scale(x.derive_scalar(&f))
            .add(&covariant_derivative_vf(&conn, &x, &y).unwrap().scale(f));
        for p in &Sample::draw(&chart, 3, 10).points {
            let a = numeric::eval_vf_at(&lhs, p, &no_params()).unwrap();
            let b = numeric::eval_vf_at(&rhs, p, &no_params()).unwrap();
            for (u, v) in a.iter().zip(&b) {
                assert!((u - v).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn nabla_identity_is_zero() {
        let conn = christoffel(&model_metric()).unwrap();
        let chart = conn.chart.clone();
        let x = VectorField::new(chart.clone(), vec![Expr::one(), Expr::var(0), Expr::var(1)]).unwrap();
        let dt = covariant_derivative_t11(&conn, &x, &Tensor11::identity(chart.clone())).unwrap();
        for row in &dt.m {
            for e in row {
                let v = e.eval(&[0.3, 0.1, -0.2], &no_params()).unwrap();
                assert!(v.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn flat_curvature_vanishes() {
        let conn = christoffel(&MetricField::euclidean(chart1())).unwrap();
        let curv = curvature(&conn);
        for a in &curv.riem {
            for b in a {
                for c in b {
                    for e in c {
                        assert!(e.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn model_curvature_golden_value() {
        // R(xi, X) xi = X for X = e^t d/dx (hyperbolic block, K = -1)
        let g = model_metric();
        let curv = curvature(&christoffel(&g).unwrap());
        let chart = g.chart.clone();
        let xi = VectorField::coordinate(chart.clone(), 0);
        let x = VectorField::coordinate(chart.clone(), 1).scale(Expr::exp(Expr::var(0)));
        let p = [0.25, 0.4, -0.1];
        let got = curvature_apply(&curv, &xi, &x, &xi, &p, &no_params()).unwrap();
        let want = numeric::eval_vf_at(&x, &p, &no_params()).unwrap();
        for (u, v) in got.iter().zip(&want) {
            assert!((u - v).norm() < 1e-9, "{u} vs {v}");
        }
    }

    #[test]
    fn norm_of_identity_is_sqrt3() {
        let g = model_metric();
        let t = Tensor11::identity(g.chart.clone());
        let n = tensor_norm(&g, &t, &[0.3, 0.2, 0.1], &no_params()).unwrap();
        assert!((n - 3.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn norm_rejects_indefinite_metric() {
        let c = chart1();
        let mut m = MetricField::euclidean(c.clone()).m;
        m[1][1] = Expr::num(-1.0);
        let g = MetricField::new(c.clone(), m).unwrap();
        let t = Tensor11::identity(c);
        assert!(matches!(
            tensor_norm(&g, &t, &[0.0, 0.0, 0.0], &no_params()),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }
}
