//! Coordinate charts, vector fields, differential forms and (1,1)-tensor
//! fields with symbolic components, plus the first-order operations on
//! them: Lie bracket, exterior derivative, Lie derivative.
//!
//! Everything is stored in the real coordinate frame of the chart.
//! Components may be complex-valued expressions; the complexified frame
//! `Z_0, Z_i, Z_ibar` is derived, never stored.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::expr::{Differentiator, Expr, Point};

/// A coordinate chart `(t, x1..xn, y1..yn)` on R^{2n+1} together with the
/// box that sample points are drawn from.
#[derive(Clone, Debug)]
pub struct ChartDecl {
    n: usize,
    names: Vec<String>,
    bbox: Vec<(f64, f64)>,
}

impl PartialEq for ChartDecl {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.names == other.names
    }
}

impl ChartDecl {
    /// Standard chart with names `t, x1..xn, y1..yn` and one sampling
    /// interval for every coordinate.
    pub fn standard(n: usize, interval: (f64, f64)) -> ChartDecl {
        assert!(n >= 1, "CR dimension must be >= 1");
        assert!(interval.0 < interval.1, "sampling box must be nonempty");
        let mut names = vec!["t".to_string()];
        for i in 1..=n {
            names.push(format!("x{i}"));
        }
        for i in 1..=n {
            names.push(format!("y{i}"));
        }
        let dim = 2 * n + 1;
        ChartDecl {
            n,
            names,
            bbox: vec![interval; dim],
        }
    }

    pub fn with_box(mut self, bbox: Vec<(f64, f64)>) -> ChartDecl {
        assert_eq!(bbox.len(), self.dim());
        assert!(bbox.iter().all(|(lo, hi)| lo < hi));
        self.bbox = bbox;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n + 1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn bbox(&self) -> &[(f64, f64)] {
        &self.bbox
    }

    pub fn coordinate_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|c| c == name)
    }

    /// Index of x^i (1-based i).
    pub fn x_index(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        i
    }

    /// Index of y^i (1-based i).
    pub fn y_index(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        self.n + i
    }
}

/// A seeded batch of sample points in the chart box.
#[derive(Clone, Debug)]
pub struct Sample {
    pub seed: u64,
    pub points: Vec<Point>,
}

impl Sample {
    pub fn draw(chart: &ChartDecl, seed: u64, count: usize) -> Sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = (0..count)
            .map(|_| {
                chart
                    .bbox
                    .iter()
                    .map(|(lo, hi)| lo + (hi - lo) * rng.gen::<f64>())
                    .collect()
            })
            .collect();
        Sample { seed, points }
    }
}

fn check_chart(a: &Arc<ChartDecl>, b: &Arc<ChartDecl>) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ChartMismatch)
    }
}

/// Vector field with one expression per coordinate.  Components may be
/// complex-valued (sections of the complexified tangent bundle).
#[derive(Clone, Debug)]
pub struct VectorField {
    pub chart: Arc<ChartDecl>,
    pub comps: Vec<Expr>,
}

impl VectorField {
    pub fn new(chart: Arc<ChartDecl>, comps: Vec<Expr>) -> Result<VectorField> {
        if comps.len() != chart.dim() {
            return Err(Error::BadDimension {
                got: comps.len(),
                dim: chart.dim(),
            });
        }
        Ok(VectorField { chart, comps })
    }

    pub fn zero(chart: Arc<ChartDecl>) -> VectorField {
        let dim = chart.dim();
        VectorField {
            chart,
            comps: vec![Expr::zero(); dim],
        }
    }

    /// The coordinate basis field `d/dx^k` (chart index k).
    pub fn coordinate(chart: Arc<ChartDecl>, k: usize) -> VectorField {
        let dim = chart.dim();
        let mut comps = vec![Expr::zero(); dim];
        comps[k] = Expr::one();
        VectorField { chart, comps }
    }

    pub fn scale(&self, f: Expr) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            comps: self.comps.iter().map(|c| f.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &VectorField) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn conj(&self) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            comps: self.comps.iter().map(|c| Expr::conj(c.clone())).collect(),
        }
    }

    /// Directional derivative of a scalar expression: X(f).
    pub fn derive_scalar(&self, f: &Expr) -> Expr {
        Expr::sum(
            self.comps
                .iter()
                .enumerate()
                .map(|(j, xj)| xj.clone() * f.differentiate(j))
                .collect(),
        )
    }
}

/// Jacobian `d_j X^k` as `jac[k][j]`, with one memoized differentiator per
/// coordinate so shared subtrees stay shared.
fn jacobian(x: &VectorField) -> Vec<Vec<Expr>> {
    let dim = x.chart.dim();
    let mut cols: Vec<Vec<Expr>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut d = Differentiator::new(j);
        cols.push(x.comps.iter().map(|c| d.diff(c)).collect());
    }
    (0..dim)
        .map(|k| (0..dim).map(|j| cols[j][k].clone()).collect())
        .collect()
}

/// Lie bracket `[X, Y]^k = X^j d_j Y^k - Y^j d_j X^k`.
pub fn lie_bracket(x: &VectorField, y: &VectorField) -> Result<VectorField> {
    check_chart(&x.chart, &y.chart)?;
    let jx = jacobian(x);
    let jy = jacobian(y);
    let dim = x.chart.dim();
    let comps = (0..dim)
        .map(|k| {
            let mut terms = Vec::with_capacity(2 * dim);
            for j in 0..dim {
                terms.push(x.comps[j].clone() * jy[k][j].clone());
                terms.push(Expr::neg(y.comps[j].clone() * jx[k][j].clone()));
            }
            Expr::sum(terms)
        })
        .collect();
    Ok(VectorField {
        chart: x.chart.clone(),
        comps,
    })
}

/// Differential form of degree 1, 2 or 3 with structurally antisymmetric
/// storage: only strictly increasing index tuples are kept.
#[derive(Clone, Debug)]
pub enum KForm {
    One {
        chart: Arc<ChartDecl>,
        comps: Vec<Expr>,
    },
    Two {
        chart: Arc<ChartDecl>,
        /// components for pairs (i, j), i < j, lexicographic
        comps: Vec<Expr>,
    },
    Three {
        chart: Arc<ChartDecl>,
        /// components for triples (i, j, k), i < j < k, lexicographic
        comps: Vec<Expr>,
    },
}

pub fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    // offset of row i in the strictly-upper-triangular enumeration
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

impl KForm {
    pub fn chart(&self) -> &Arc<ChartDecl> {
        match self {
            KForm::One { chart, .. } | KForm::Two { chart, .. } | KForm::Three { chart, .. } => {
                chart
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            KForm::One { .. } => 1,
            KForm::Two { .. } => 2,
            KForm::Three { .. } => 3,
        }
    }

    pub fn one(chart: Arc<ChartDecl>, comps: Vec<Expr>) -> Result<KForm> {
        if comps.len() != chart.dim() {
            return Err(Error::BadDimension {
                got: comps.len(),
                dim: chart.dim(),
            });
        }
        Ok(KForm::One { chart, comps })
    }

    /// Build a 2-form from an arbitrary component callback by explicit
    /// antisymmetrization: stored (i,j) entry is (c(i,j) - c(j,i))/2.
    pub fn two_from(chart: Arc<ChartDecl>, c: impl Fn(usize, usize) -> Expr) -> KForm {
        let dim = chart.dim();
        let mut comps = Vec::with_capacity(dim * (dim - 1) / 2);
        for i in 0..dim {
            for j in (i + 1)..dim {
                comps.push(Expr::num(0.5) * (c(i, j) - c(j, i)));
            }
        }
        KForm::Two { chart, comps }
    }

    pub fn one_comps(&self) -> &[Expr] {
        match self {
            KForm::One { comps, .. } => comps,
            _ => panic!("expected a 1-form"),
        }
    }

    /// Value on a pair of coordinate basis fields, with sign.
    pub fn at_pair(&self, i: usize, j: usize) -> Expr {
        match self {
            KForm::Two { chart, comps } => {
                use std::cmp::Ordering::*;
                match i.cmp(&j) {
                    Less => comps[pair_index(chart.dim(), i, j)].clone(),
                    Equal => Expr::zero(),
                    Greater => Expr::neg(comps[pair_index(chart.dim(), j, i)].clone()),
                }
            }
            _ => panic!("expected a 2-form"),
        }
    }

    /// 1-form applied to a vector field.
    pub fn apply(&self, x: &VectorField) -> Result<Expr> {
        match self {
            KForm::One { chart, comps } => {
                check_chart(chart, &x.chart)?;
                Ok(Expr::sum(
                    comps
                        .iter()
                        .zip(&x.comps)
                        .map(|(w, v)| w.clone() * v.clone())
                        .collect(),
                ))
            }
            _ => panic!("apply on a single field expects a 1-form"),
        }
    }

    /// 2-form on a pair of vector fields.
    pub fn apply2(&self, x: &VectorField, y: &VectorField) -> Result<Expr> {
        match self {
            KForm::Two { chart, .. } => {
                check_chart(chart, &x.chart)?;
                check_chart(chart, &y.chart)?;
                let dim = chart.dim();
                let mut terms = Vec::new();
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        let w = self.at_pair(i, j);
                        if w.is_zero() {
                            continue;
                        }
                        terms.push(
                            w * (x.comps[i].clone() * y.comps[j].clone()
                                - x.comps[j].clone() * y.comps[i].clone()),
                        );
                    }
                }
                Ok(Expr::sum(terms))
            }
            _ => panic!("apply2 expects a 2-form"),
        }
    }

    /// All stored independent components.
    pub fn components(&self) -> &[Expr] {
        match self {
            KForm::One { comps, .. } | KForm::Two { comps, .. } | KForm::Three { comps, .. } => {
                comps
            }
        }
    }
}

/// Exterior derivative with the 1/(k+1) normalization, so that for a
/// 1-form `d w (X, Y) = (X w(Y) - Y w(X) - w([X, Y])) / 2`.  This is the
/// convention on which the two Levi form expressions agree exactly.
pub fn exterior_derivative(w: &KForm) -> Result<KForm> {
    match w {
        KForm::One { chart, comps } => {
            let dim = chart.dim();
            let mut out = Vec::with_capacity(dim * (dim - 1) / 2);
            for i in 0..dim {
                for j in (i + 1)..dim {
                    out.push(
                        Expr::num(0.5) * (comps[j].differentiate(i) - comps[i].differentiate(j)),
                    );
                }
            }
            Ok(KForm::Two {
                chart: chart.clone(),
                comps: out,
            })
        }
        KForm::Two { chart, .. } => {
            let dim = chart.dim();
            let mut out = Vec::new();
            for i in 0..dim {
                for j in (i + 1)..dim {
                    for k in (j + 1)..dim {
                        let a = w.at_pair(j, k).differentiate(i);
                        let b = w.at_pair(i, k).differentiate(j);
                        let c = w.at_pair(i, j).differentiate(k);
                        out.push(Expr::quot(a - b + c, Expr::num(3.0)));
                    }
                }
            }
            Ok(KForm::Three {
                chart: chart.clone(),
                comps: out,
            })
        }
        KForm::Three { .. } => Err(Error::UnsupportedDegree(3)),
    }
}

/// Differential of a scalar as a 1-form (no normalization factor).
pub fn d_scalar(chart: &Arc<ChartDecl>, f: &Expr) -> KForm {
    KForm::One {
        chart: chart.clone(),
        comps: (0..chart.dim()).map(|j| f.differentiate(j)).collect(),
    }
}

/// Wedge of two 1-forms: (a ^ b)(X, Y) = a(X)b(Y) - a(Y)b(X).
pub fn wedge_11(a: &KForm, b: &KForm) -> Result<KForm> {
    match (a, b) {
        (KForm::One { chart, comps: ac }, KForm::One { chart: cb, comps: bc }) => {
            check_chart(chart, cb)?;
            let dim = chart.dim();
            let mut out = Vec::with_capacity(dim * (dim - 1) / 2);
            for i in 0..dim {
                for j in (i + 1)..dim {
                    out.push(ac[i].clone() * bc[j].clone() - ac[j].clone() * bc[i].clone());
                }
            }
            Ok(KForm::Two {
                chart: chart.clone(),
                comps: out,
            })
        }
        _ => Err(Error::UnsupportedDegree(a.degree() + b.degree())),
    }
}

/// A (1,1)-tensor field: `(T d_j)^k = m[k][j]`.
#[derive(Clone, Debug)]
pub struct Tensor11 {
    pub chart: Arc<ChartDecl>,
    pub m: Vec<Vec<Expr>>,
}

impl Tensor11 {
    pub fn new(chart: Arc<ChartDecl>, m: Vec<Vec<Expr>>) -> Result<Tensor11> {
        let dim = chart.dim();
        if m.len() != dim || m.iter().any(|row| row.len() != dim) {
            return Err(Error::BadDimension { got: m.len(), dim });
        }
        Ok(Tensor11 { chart, m })
    }

    pub fn identity(chart: Arc<ChartDecl>) -> Tensor11 {
        let dim = chart.dim();
        let m = (0..dim)
            .map(|k| {
                (0..dim)
                    .map(|j| if k == j { Expr::one() } else { Expr::zero() })
                    .collect()
            })
            .collect();
        Tensor11 { chart, m }
    }

    pub fn zero(chart: Arc<ChartDecl>) -> Tensor11 {
        let dim = chart.dim();
        Tensor11 {
            chart,
            m: vec![vec![Expr::zero(); dim]; dim],
        }
    }

    pub fn apply(&self, x: &VectorField) -> Result<VectorField> {
        check_chart(&self.chart, &x.chart)?;
        let dim = self.chart.dim();
        let comps = (0..dim)
            .map(|k| {
                Expr::sum(
                    (0..dim)
                        .map(|j| self.m[k][j].clone() * x.comps[j].clone())
                        .collect(),
                )
            })
            .collect();
        Ok(VectorField {
            chart: self.chart.clone(),
            comps,
        })
    }

    /// Column j as a vector field: T(d_j).
    pub fn column(&self, j: usize) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            comps: self.m.iter().map(|row| row[j].clone()).collect(),
        }
    }

    pub fn compose(&self, other: &Tensor11) -> Result<Tensor11> {
        check_chart(&self.chart, &other.chart)?;
        let dim = self.chart.dim();
        let m = (0..dim)
            .map(|k| {
                (0..dim)
                    .map(|j| {
                        Expr::sum(
                            (0..dim)
                                .map(|l| self.m[k][l].clone() * other.m[l][j].clone())
                                .collect(),
                        )
                    })
                    .collect()
            })
            .collect();
        Ok(Tensor11 {
            chart: self.chart.clone(),
            m,
        })
    }

    pub fn add(&self, other: &Tensor11) -> Tensor11 {
        let dim = self.chart.dim();
        let m = (0..dim)
            .map(|k| {
                (0..dim)
                    .map(|j| self.m[k][j].clone() + other.m[k][j].clone())
                    .collect()
            })
            .collect();
        Tensor11 {
            chart: self.chart.clone(),
            m,
        }
    }

    pub fn sub(&self, other: &Tensor11) -> Tensor11 {
        self.add(&other.scale(Expr::num(-1.0)))
    }

    pub fn scale(&self, f: Expr) -> Tensor11 {
        let m = self
            .m
            .iter()
            .map(|row| row.iter().map(|e| f.clone() * e.clone()).collect())
            .collect();
        Tensor11 {
            chart: self.chart.clone(),
            m,
        }
    }

    pub fn from_columns(chart: Arc<ChartDecl>, cols: Vec<VectorField>) -> Tensor11 {
        let dim = chart.dim();
        assert_eq!(cols.len(), dim);
        let m = (0..dim)
            .map(|k| (0..dim).map(|j| cols[j].comps[k].clone()).collect())
            .collect();
        Tensor11 { chart, m }
    }
}

/// Symmetric metric tensor field `g_{ij}`.
#[derive(Clone, Debug)]
pub struct MetricField {
    pub chart: Arc<ChartDecl>,
    pub m: Vec<Vec<Expr>>,
}

impl MetricField {
    pub fn new(chart: Arc<ChartDecl>, m: Vec<Vec<Expr>>) -> Result<MetricField> {
        let dim = chart.dim();
        if m.len() != dim || m.iter().any(|row| row.len() != dim) {
            return Err(Error::BadDimension { got: m.len(), dim });
        }
        Ok(MetricField { chart, m })
    }

    pub fn euclidean(chart: Arc<ChartDecl>) -> MetricField {
        let dim = chart.dim();
        let m = (0..dim)
            .map(|k| {
                (0..dim)
                    .map(|j| if k == j { Expr::one() } else { Expr::zero() })
                    .collect()
            })
            .collect();
        MetricField { chart, m }
    }

    /// Bilinear (complexified, no conjugation) inner product of fields.
    pub fn inner(&self, x: &VectorField, y: &VectorField) -> Result<Expr> {
        check_chart(&self.chart, &x.chart)?;
        check_chart(&self.chart, &y.chart)?;
        let dim = self.chart.dim();
        let mut terms = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                if self.m[i][j].is_zero() {
                    continue;
                }
                terms.push(self.m[i][j].clone() * x.comps[i].clone() * y.comps[j].clone());
            }
        }
        Ok(Expr::sum(terms))
    }
}

/// Lie derivative of a (1,1)-tensor along xi:
/// `(L_xi T)(X) = [xi, T X] - T [xi, X]` on coordinate basis fields.
pub fn lie_derivative_tensor11(xi: &VectorField, t: &Tensor11) -> Result<Tensor11> {
    check_chart(&xi.chart, &t.chart)?;
    let chart = t.chart.clone();
    let dim = chart.dim();
    let mut cols = Vec::with_capacity(dim);
    for j in 0..dim {
        let ej = VectorField::coordinate(chart.clone(), j);
        let a = lie_bracket(xi, &t.column(j))?;
        let b = t.apply(&lie_bracket(xi, &ej)?)?;
        cols.push(a.sub(&b));
    }
    Ok(Tensor11::from_columns(chart, cols))
}

/// The complexified frame (Z_0, Z_1..Z_n, Z_1bar..Z_nbar) with
/// `Z_i = (d/dx^i - i d/dy^i)/2` and `Z_ibar = conj(Z_i)`.
pub fn complexify_frame(chart: &Arc<ChartDecl>) -> Vec<VectorField> {
    let n = chart.n();
    let mut frame = Vec::with_capacity(2 * n + 1);
    frame.push(VectorField::coordinate(chart.clone(), 0));
    let half = Expr::num(0.5);
    let neg_half_i = Expr::num(-0.5) * Expr::i();
    for i in 1..=n {
        let mut comps = vec![Expr::zero(); chart.dim()];
        comps[chart.x_index(i)] = half.clone();
        comps[chart.y_index(i)] = neg_half_i.clone();
        frame.push(VectorField {
            chart: chart.clone(),
            comps,
        });
    }
    for i in 0..n {
        frame.push(frame[1 + i].conj());
    }
    frame
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Complex;
    use std::collections::HashMap;

    fn no_params() -> HashMap<String, f64> {
        HashMap::new()
    }

    fn chart1() -> Arc<ChartDecl> {
        Arc::new(ChartDecl::standard(1, (-0.8, 0.8)))
    }

    fn eval_vf(v: &VectorField, p: &[f64]) -> Vec<Complex> {
        let params = no_params();
        let mut ev = crate::expr::Evaluator::new(p, &params);
        v.comps.iter().map(|c| ev.eval(c).unwrap()).collect()
    }

    #[test]
    fn bracket_coordinate_example() {
        // [d/dt, e^t d/dx] = e^t d/dx
        let c = chart1();
        let dt = VectorField::coordinate(c.clone(), 0);
        let ex = VectorField::coordinate(c.clone(), 1).scale(Expr::exp(Expr::var(0)));
        let b = lie_bracket(&dt, &ex).unwrap();
        let p = [0.4, 0.1, -0.2];
        let got = eval_vf(&b, &p);
        assert!((got[1].re - f64::exp(0.4)).abs() < 1e-14);
        assert!(got[0].norm() < 1e-15 && got[2].norm() < 1e-15);
    }

    #[test]
    fn bracket_antisymmetry_with_self() {
        let c = chart1();
        let x = VectorField::new(
            c.clone(),
            vec![
                Expr::sin(Expr::var(1)),
                Expr::var(0) * Expr::var(2),
                Expr::exp(Expr::var(0)),
            ],
        )
        .unwrap();
        let b = lie_bracket(&x, &x).unwrap();
        let got = eval_vf(&b, &[0.3, 0.5, -0.1]);
        assert!(got.iter().all(|v| v.norm() < 1e-13));
    }

    #[test]
    fn bracket_chart_mismatch() {
        let a = chart1();
        let b = Arc::new(ChartDecl::standard(2, (-0.8, 0.8)));
        let x = VectorField::coordinate(a, 0);
        let y = VectorField::coordinate(b, 0);
        assert!(matches!(lie_bracket(&x, &y), Err(Error::ChartMismatch)));
    }

    #[test]
    fn d_of_dt_is_zero() {
        let c = chart1();
        let eta = KForm::one(
            c.clone(),
            vec![Expr::one(), Expr::zero(), Expr::zero()],
        )
        .unwrap();
        let d = exterior_derivative(&eta).unwrap();
        assert!(d.components().iter().all(|e| e.is_zero()));
    }

    #[test]
    fn d_t_dx_has_half_component() {
        // d(t dx1)(dt, dx1) = 1/2 under the chosen convention
        let c = chart1();
        let w = KForm::one(c.clone(), vec![Expr::zero(), Expr::var(0), Expr::zero()]).unwrap();
        let d = exterior_derivative(&w).unwrap();
        let v = d.at_pair(0, 1).eval(&[0.0, 0.0, 0.0], &no_params()).unwrap();
        assert_eq!(v, Complex::new(0.5, 0.0));

        // oracle: d w (X, Y) = (X w(Y) - Y w(X) - w([X, Y])) / 2 on basis fields
        let x = VectorField::coordinate(c.clone(), 0);
        let y = VectorField::coordinate(c.clone(), 1);
        let wy = w.apply(&y).unwrap();
        let wx = w.apply(&x).unwrap();
        let oracle = Expr::num(0.5)
            * (x.derive_scalar(&wy) - y.derive_scalar(&wx)
                - w.apply(&lie_bracket(&x, &y).unwrap()).unwrap());
        let p = [0.7, 0.1, 0.3];
        let lhs = d.apply2(&x, &y).unwrap().eval(&p, &no_params()).unwrap();
        let rhs = oracle.eval(&p, &no_params()).unwrap();
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn dd_is_zero_on_a_one_form() {
        let c = chart1();
        let w = KForm::one(
            c.clone(),
            vec![
                Expr::sin(Expr::var(1) * Expr::var(2)),
                Expr::exp(Expr::var(0)) * Expr::var(2),
                Expr::int_pow(Expr::var(0), 3),
            ],
        )
        .unwrap();
        let dd = exterior_derivative(&exterior_derivative(&w).unwrap()).unwrap();
        for e in dd.components() {
            let v = e.eval(&[0.3, -0.2, 0.6], &no_params()).unwrap();
            assert!(v.norm() < 1e-12);
        }
    }

    #[test]
    fn lie_derivative_of_identity_vanishes() {
        let c = chart1();
        let xi = VectorField::new(
            c.clone(),
            vec![Expr::one(), Expr::var(2), Expr::neg(Expr::var(1))],
        )
        .unwrap();
        let l = lie_derivative_tensor11(&xi, &Tensor11::identity(c.clone())).unwrap();
        for row in &l.m {
            for e in row {
                let v = e.eval(&[0.1, 0.4, -0.3], &no_params()).unwrap();
                assert!(v.norm() < 1e-13);
            }
        }
    }

    #[test]
    fn complex_frame_shape() {
        let c = Arc::new(ChartDecl::standard(2, (-0.8, 0.8)));
        let frame = complexify_frame(&c);
        assert_eq!(frame.len(), 5);
        // Z_1 = (dx1 - i dy1)/2
        let z1 = eval_vf2(&frame[1], &[0.0; 5]);
        assert_eq!(z1[1], Complex::new(0.5, 0.0));
        assert_eq!(z1[3], Complex::new(0.0, -0.5));
        // Z_1bar = conj(Z_1)
        let z1b = eval_vf2(&frame[3], &[0.0; 5]);
        assert_eq!(z1b[1], z1[1].conj());
        assert_eq!(z1b[3], z1[3].conj());
    }

    fn eval_vf2(v: &VectorField, p: &[f64]) -> Vec<Complex> {
        let params = HashMap::new();
        let mut ev = crate::expr::Evaluator::new(p, &params);
        v.comps.iter().map(|c| ev.eval(c).unwrap()).collect()
    }
}
