//! The CR layer: sections of the holomorphic eigenbundle, CR
//! integrability, the Levi form, a builder that assembles a structure
//! from CR chart data, and the Hermitian connection on the eigenbundle.
//!
//! Complex chart coordinates are always lowered to the real chart
//! `(t, x^i, y^i)` with `z^i = x^i + i y^i` before any differentiation;
//! holomorphic derivatives are derived operators, never primitives.

use std::sync::Arc;

use crate::accs::ChartStructure;
use crate::error::{Error, Result};
use crate::expr::{Complex, Evaluator, Expr};
use crate::fields::{
    exterior_derivative, lie_bracket, ChartDecl, KForm, MetricField, Sample, Tensor11,
    VectorField,
};
use crate::numeric;
use crate::report::{Residuals, VerificationReport};
use crate::riemann::covariant_derivative_vf;

/// Tolerance for the internal agreement of the two Levi form expressions.
const LEVI_AGREEMENT_TOL: f64 = 1e-9;

/// A section of the holomorphic eigenbundle: a horizontal real field `X`
/// together with `Z = X - i phi X`, which satisfies `phi Z = i Z`.
#[derive(Clone, Debug)]
pub struct CRSection {
    pub x: VectorField,
    pub z: VectorField,
}

/// Builds the section `Z = X - i phi X` from a horizontal field.  `X`
/// must satisfy `eta(X) = 0` at the sampled points; the eigenvalue
/// identity `phi Z = i Z` is verified there as well.
pub fn dprime_section(
    s: &ChartStructure,
    x: &VectorField,
    sample: &Sample,
    tolerance: f64,
) -> Result<CRSection> {
    let eta_x = s.eta.apply(x)?;
    for p in &sample.points {
        let mut ev = Evaluator::new(p, &s.params);
        let r = ev.eval(&eta_x)?.norm();
        if r > tolerance {
            return Err(Error::NotHorizontal {
                residual: r,
                point: p.clone(),
            });
        }
    }
    let phix = s.phi.apply(x)?;
    let z = x.sub(&phix.scale(Expr::i()));
    // phi Z = i Z holds identically for horizontal X; verify numerically
    let phiz = s.phi.apply(&z)?;
    let defect = phiz.sub(&z.scale(Expr::i()));
    for p in &sample.points {
        let v = numeric::eval_vf_at(&defect, p, &s.params)?;
        let r = numeric::vec_norm(&v);
        if r > tolerance {
            return Err(Error::NotHorizontal {
                residual: r,
                point: p.clone(),
            });
        }
    }
    Ok(CRSection { x: x.clone(), z })
}

/// Size of the component of `v` outside the holomorphic eigenbundle at a
/// point: the eta-component plus the anti-holomorphic part
/// `(v_h + i phi v_h) / 2` of the horizontal projection.
fn eigenbundle_defect(
    phi: &[Vec<Complex>],
    xi: &[Complex],
    eta: &[Complex],
    v: &[Complex],
) -> f64 {
    let dim = v.len();
    let eta_v: Complex = eta.iter().zip(v).map(|(a, b)| a * b).sum();
    let vh: Vec<Complex> = (0..dim).map(|k| v[k] - eta_v * xi[k]).collect();
    let phivh = numeric::mat_vec(phi, &vh);
    let i = Complex::new(0.0, 1.0);
    let out: Vec<Complex> = (0..dim).map(|k| 0.5 * (vh[k] + i * phivh[k])).collect();
    numeric::vec_norm(&out) + eta_v.norm()
}

/// Horizontal projections of the coordinate fields `d/dx^j`, which span
/// the holomorphic eigenbundle after applying `Z = X - i phi X`.
fn spanning_sections(s: &ChartStructure) -> Result<Vec<VectorField>> {
    let n = s.chart.n();
    let mut out = Vec::with_capacity(n);
    for j in 1..=n {
        let k = s.chart.x_index(j);
        let ek = VectorField::coordinate(s.chart.clone(), k);
        let x = ek.sub(&s.xi.scale(s.eta_comps()[k].clone()));
        let phix = s.phi.apply(&x)?;
        out.push(x.sub(&phix.scale(Expr::i())));
    }
    Ok(out)
}

/// Measures, for every bracket of spanning eigenbundle sections, the
/// component outside the eigenbundle.  Pass means the bundle is closed
/// under brackets (CR integrability) at the sampled points.
pub fn check_cr_integrability(
    s: &ChartStructure,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    let sections = spanning_sections(s)?;
    let n = sections.len();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            brackets.push(lie_bracket(&sections[i], &sections[j])?);
        }
    }
    let mut res = Residuals::new("cr-integrability", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let v = s.eval_at(p)?;
        for b in &brackets {
            let bv = numeric::eval_vf_at(b, p, &s.params)?;
            res.record(eigenbundle_defect(&v.phi, &v.xi, &v.eta, &bv));
        }
    }
    Ok(res.finish())
}

/// Levi form of a section at a point, computed from the bracket
/// expression `2 eta([X, phi X])` and cross-checked against
/// `-4 d eta(X, phi X)`.  The two agree exactly under the exterior
/// derivative convention used by this crate; a disagreement beyond
/// 1e-9 signals a convention bug and is returned as an error.
pub fn levi_form(s: &ChartStructure, section: &CRSection, point: &[f64]) -> Result<f64> {
    let phix = s.phi.apply(&section.x)?;
    let bracket = lie_bracket(&section.x, &phix)?;
    let via_bracket = Expr::num(2.0) * s.eta.apply(&bracket)?;
    let deta = exterior_derivative(&s.eta)?;
    let via_d = Expr::num(-4.0) * deta.apply2(&section.x, &phix)?;
    let mut ev = Evaluator::new(point, &s.params);
    let b = ev.eval(&via_bracket)?;
    let d = ev.eval(&via_d)?;
    if (b - d).norm() > LEVI_AGREEMENT_TOL {
        return Err(Error::LeviConventionMismatch {
            bracket: b.re,
            exterior: d.re,
        });
    }
    Ok(b.re)
}

/// Batch Levi-flatness check: builds sections from the horizontal
/// projections of every x- and y-coordinate field and records |L| at
/// each sampled point, plus the disagreement of the two Levi form
/// expressions.  Pass means the structure is Levi flat on the sample.
pub fn check_levi_flatness(
    s: &ChartStructure,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    let n = s.chart.n();
    let deta = exterior_derivative(&s.eta)?;
    let mut values = Vec::new();
    for i in 1..=n {
        for k in [s.chart.x_index(i), s.chart.y_index(i)] {
            let ek = VectorField::coordinate(s.chart.clone(), k);
            let x = ek.sub(&s.xi.scale(s.eta_comps()[k].clone()));
            let phix = s.phi.apply(&x)?;
            let bracket = lie_bracket(&x, &phix)?;
            let via_bracket = Expr::num(2.0) * s.eta.apply(&bracket)?;
            let via_d = Expr::num(-4.0) * deta.apply2(&x, &phix)?;
            values.push((via_bracket, via_d));
        }
    }
    let mut res = Residuals::new("levi-flatness", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let mut ev = Evaluator::new(p, &s.params);
        for (vb, vd) in &values {
            let b = ev.eval(vb)?;
            let d = ev.eval(vd)?;
            if (b - d).norm() > LEVI_AGREEMENT_TOL {
                return Err(Error::LeviConventionMismatch {
                    bracket: b.re,
                    exterior: d.re,
                });
            }
            res.record(b.norm());
        }
    }
    Ok(res.finish())
}

/// CR chart data: coefficient functions `a^i` (complex, in the real
/// chart coordinates) and the Hermitian matrix `g_ib` with entries
/// g_{i jbar}, from which the structure tensors are reconstructed.
#[derive(Clone, Debug)]
pub struct CRChartData {
    pub chart: Arc<ChartDecl>,
    pub a: Vec<Expr>,
    /// `gh[i][j]` is the Hermitian entry `g_{i jbar}` (0-based).
    pub gh: Vec<Vec<Expr>>,
}

impl CRChartData {
    pub fn new(chart: Arc<ChartDecl>, a: Vec<Expr>, gh: Vec<Vec<Expr>>) -> Result<CRChartData> {
        let n = chart.n();
        if a.len() != n || gh.len() != n || gh.iter().any(|row| row.len() != n) {
            return Err(Error::BadDimension { got: a.len(), dim: n });
        }
        Ok(CRChartData { chart, a, gh })
    }

    /// Flat data: `a = 0`, `g_{i jbar} = delta_{ij} / 2` (the value the
    /// orthonormal-frame convention assigns to `g(Z_i, Z_jbar)`).
    pub fn flat(chart: Arc<ChartDecl>) -> CRChartData {
        let n = chart.n();
        let gh = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Expr::num(0.5) } else { Expr::zero() })
                    .collect()
            })
            .collect();
        CRChartData {
            chart,
            a: vec![Expr::zero(); n],
            gh,
        }
    }

    /// `b_i = -sum_j conj(a^j) g_{i jbar}`.
    pub fn b(&self) -> Vec<Expr> {
        let n = self.chart.n();
        (0..n)
            .map(|i| {
                Expr::neg(Expr::sum(
                    (0..n)
                        .map(|j| Expr::conj(self.a[j].clone()) * self.gh[i][j].clone())
                        .collect(),
                ))
            })
            .collect()
    }

    /// `r = 1 + 2 sum_{ij} a^i conj(a^j) g_{i jbar}`.
    pub fn r(&self) -> Expr {
        let n = self.chart.n();
        let mut terms = vec![Expr::one()];
        for i in 0..n {
            for j in 0..n {
                terms.push(
                    Expr::num(2.0)
                        * self.a[i].clone()
                        * Expr::conj(self.a[j].clone())
                        * self.gh[i][j].clone(),
                );
            }
        }
        Expr::sum(terms)
    }
}

/// Assembles the real-coordinate structure tensors from CR chart data:
/// `eta = dt`; `xi = d/dt + Re(a^i) d/dx^i + Im(a^i) d/dy^i`;
/// `phi dx^i = dy^i`, `phi dy^i = -dx^i`,
/// `phi dt = Im(a^i) dx^i - Re(a^i) dy^i`; and the metric block
/// `g_tt = r`, `g(dt, dx_i) = 2 Re b_i`, `g(dt, dy_i) = -2 Im b_i`,
/// `g(dx_i, dx_j) = g(dy_i, dy_j) = 2 Re g_{i jbar}`,
/// `g(dx_i, dy_j) = 2 Im g_{i jbar}`.
pub fn build_from_cr_chart(data: &CRChartData) -> Result<ChartStructure> {
    let chart = data.chart.clone();
    let n = chart.n();
    let dim = chart.dim();

    // Hermitian symmetry and positive definiteness, probed at a fixed
    // deterministic sample.
    let probe = Sample::draw(&chart, 0, 8);
    let no_params = std::collections::HashMap::new();
    let mut herm = 0.0f64;
    for p in &probe.points {
        let mut ev = Evaluator::new(p, &no_params);
        for i in 0..n {
            for j in 0..n {
                let gij = ev.eval(&data.gh[i][j])?;
                let gji = ev.eval(&data.gh[j][i])?;
                herm = herm.max((gij - gji.conj()).norm());
            }
        }
    }
    if herm > 1e-10 {
        return Err(Error::NotHermitian { residual: herm });
    }

    let mut xi = vec![Expr::zero(); dim];
    xi[0] = Expr::one();
    for i in 1..=n {
        xi[chart.x_index(i)] = Expr::re(data.a[i - 1].clone());
        xi[chart.y_index(i)] = Expr::im(data.a[i - 1].clone());
    }
    let xi = VectorField::new(chart.clone(), xi)?;

    let mut eta = vec![Expr::zero(); dim];
    eta[0] = Expr::one();
    let eta = KForm::one(chart.clone(), eta)?;

    let mut phi = Tensor11::zero(chart.clone());
    for i in 1..=n {
        phi.m[chart.y_index(i)][chart.x_index(i)] = Expr::one();
        phi.m[chart.x_index(i)][chart.y_index(i)] = Expr::num(-1.0);
        phi.m[chart.x_index(i)][0] = Expr::im(data.a[i - 1].clone());
        phi.m[chart.y_index(i)][0] = Expr::neg(Expr::re(data.a[i - 1].clone()));
    }

    let b = data.b();
    let mut g = vec![vec![Expr::zero(); dim]; dim];
    g[0][0] = data.r();
    for i in 1..=n {
        let xi_ = chart.x_index(i);
        let yi = chart.y_index(i);
        let bx = Expr::num(2.0) * Expr::re(b[i - 1].clone());
        let by = Expr::num(-2.0) * Expr::im(b[i - 1].clone());
        g[0][xi_] = bx.clone();
        g[xi_][0] = bx;
        g[0][yi] = by.clone();
        g[yi][0] = by;
        for j in 1..=n {
            let xj = chart.x_index(j);
            let yj = chart.y_index(j);
            let re = Expr::num(2.0) * Expr::re(data.gh[i - 1][j - 1].clone());
            let im = Expr::num(2.0) * Expr::im(data.gh[i - 1][j - 1].clone());
            g[xi_][xj] = re.clone();
            g[yi][yj] = re;
            g[xi_][yj] = im.clone();
            g[yj][xi_] = im;
        }
    }
    let g = MetricField::new(chart.clone(), g)?;

    for p in &probe.points {
        let mut ev = Evaluator::new(p, &no_params);
        let gm = numeric::eval_metric(&mut ev, &g)?;
        if !numeric::is_positive_definite(&gm) {
            return Err(Error::NotPositiveDefinite { point: p.clone() });
        }
    }

    Ok(ChartStructure::new(chart, phi, xi, eta, g))
}

/// Reads CR chart data back off a structure in the standard realization
/// (`eta = dt`, `phi dx^i = dy^i`).  `a^i = xi^{x_i} + i xi^{y_i}` and
/// `g_{i jbar} = (g(dx_i, dx_j) + i g(dx_i, dy_j)) / 2`.
pub fn extract_cr_data(s: &ChartStructure) -> Result<CRChartData> {
    let chart = s.chart.clone();
    let n = chart.n();
    let center: Vec<f64> = chart
        .bbox()
        .iter()
        .map(|(lo, hi)| 0.5 * (lo + hi))
        .collect();
    let mut ev = Evaluator::new(&center, &s.params);
    for (k, e) in s.eta_comps().iter().enumerate() {
        let want = Complex::new(if k == 0 { 1.0 } else { 0.0 }, 0.0);
        if (ev.eval(e)? - want).norm() > 1e-10 {
            return Err(Error::WrongRealization(
                "eta is not dt in this chart".into(),
            ));
        }
    }
    for i in 1..=n {
        let got = ev.eval(&s.phi.m[chart.y_index(i)][chart.x_index(i)])?;
        if (got - Complex::new(1.0, 0.0)).norm() > 1e-10 {
            return Err(Error::WrongRealization(
                "phi does not map dx^i to dy^i in this chart".into(),
            ));
        }
    }
    let a = (1..=n)
        .map(|i| {
            s.xi.comps[chart.x_index(i)].clone()
                + Expr::i() * s.xi.comps[chart.y_index(i)].clone()
        })
        .collect();
    let gh = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    Expr::num(0.5)
                        * (s.g.m[chart.x_index(i)][chart.x_index(j)].clone()
                            + Expr::i()
                                * s.g.m[chart.x_index(i)][chart.y_index(j)].clone())
                })
                .collect()
        })
        .collect();
    CRChartData::new(chart, a, gh)
}

/// The Hermitian metric `H(Z, W) = g(Z, conj W)` and the connection
/// `nabla'_X Z = nabla_X Z - g(X, A Z) xi` on the holomorphic
/// eigenbundle.  The subtracted term is exactly the xi-component of
/// `nabla_X Z` (the Kaehlerian-leaves identity makes the horizontal
/// remainder holomorphic), so `nabla'` is the eigenbundle projection of
/// the Levi-Civita derivative.
pub struct HermitianConnectionEval<'a> {
    s: &'a ChartStructure,
}

impl<'a> HermitianConnectionEval<'a> {
    pub fn nabla(&self, x: &VectorField, z: &VectorField) -> Result<VectorField> {
        let conn = self.s.connection()?;
        let az = self.s.tensor_a()?.apply(z)?;
        let scalar = self.s.g.inner(x, &az)?;
        Ok(covariant_derivative_vf(conn, x, z)?.sub(&self.s.xi.scale(scalar)))
    }

    pub fn h(&self, z: &VectorField, w: &VectorField) -> Result<Expr> {
        self.s.g.inner(z, &w.conj())
    }
}

/// Builds the Hermitian connection evaluator after confirming the
/// structure is CR integrable at the sampled points.
pub fn hermitian_connection<'a>(
    s: &'a ChartStructure,
    sample: &Sample,
    tolerance: f64,
) -> Result<HermitianConnectionEval<'a>> {
    let rep = check_cr_integrability(s, sample, tolerance)?;
    if !rep.pass {
        return Err(Error::NotCrIntegrable {
            residual: rep.max_residual,
        });
    }
    Ok(HermitianConnectionEval { s })
}

/// Residuals of the two Hermitian connection guarantees at the sampled
/// points: `nabla'_X Z` stays in the holomorphic eigenbundle, and
/// `X H(Z1, Z2) = H(nabla'_X Z1, Z2) + H(Z1, nabla'_X Z2)`; also checks
/// `H(Z, Z)` is real and nonnegative.
pub fn check_hermitian_connection(
    s: &ChartStructure,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    let hc = hermitian_connection(s, sample, tolerance)?;
    let sections = spanning_sections(s)?;
    let dim = s.chart.dim();
    let coords: Vec<VectorField> = (0..dim)
        .map(|k| VectorField::coordinate(s.chart.clone(), k))
        .collect();

    // nabla'_{d_k} Z_j, precomputed symbolically
    let mut nablas = Vec::new();
    for x in &coords {
        let row: Vec<VectorField> = sections
            .iter()
            .map(|z| hc.nabla(x, z))
            .collect::<Result<_>>()?;
        nablas.push(row);
    }
    // compatibility defect expressions
    let mut compat = Vec::new();
    for (k, x) in coords.iter().enumerate() {
        for (i, zi) in sections.iter().enumerate() {
            for (j, zj) in sections.iter().enumerate() {
                let lhs = x.derive_scalar(&hc.h(zi, zj)?);
                let rhs = hc.h(&nablas[k][i], zj)? + hc.h(zi, &nablas[k][j])?;
                compat.push(lhs - rhs);
            }
        }
    }

    let mut res = Residuals::new("hermitian-connection", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let v = s.eval_at(p)?;
        for row in &nablas {
            for nz in row {
                let nv = numeric::eval_vf_at(nz, p, &s.params)?;
                res.record(eigenbundle_defect(&v.phi, &v.xi, &v.eta, &nv));
            }
        }
        let mut ev = Evaluator::new(p, &s.params);
        for e in &compat {
            res.record(ev.eval(e)?.norm());
        }
        for z in &sections {
            let hzz = ev.eval(&hc.h(z, z)?)?;
            res.record(hzz.im.abs());
            res.record((-hzz.re).max(0.0));
        }
    }
    Ok(res.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::IDENTITY_TOL;
    use crate::accs::{check_acm_axioms, check_almost_cosymplectic, check_kahler_leaves};

    fn chart1() -> Arc<ChartDecl> {
        Arc::new(ChartDecl::standard(1, (-0.8, 0.8)))
    }

    fn flat() -> ChartStructure {
        build_from_cr_chart(&CRChartData::flat(chart1())).unwrap()
    }

    /// Same warped structure as in the accs tests.
    fn warp() -> ChartStructure {
        let c = chart1();
        let e2t = Expr::exp(Expr::num(2.0) * Expr::var(0));
        let em2t = Expr::exp(Expr::num(-2.0) * Expr::var(0));
        let mut phi = Tensor11::zero(c.clone());
        phi.m[2][1] = em2t.clone();
        phi.m[1][2] = Expr::neg(e2t.clone());
        let mut g = MetricField::euclidean(c.clone()).m;
        g[1][1] = em2t;
        g[2][2] = e2t;
        ChartStructure::new(
            c.clone(),
            phi,
            VectorField::coordinate(c.clone(), 0),
            KForm::one(c.clone(), vec![Expr::one(), Expr::zero(), Expr::zero()]).unwrap(),
            MetricField::new(c, g).unwrap(),
        )
    }

    /// Contact-type fixture: eta = dt - y dx, frame (d/dt, d/dx + y d/dt,
    /// d/dy) orthonormal; not almost cosymplectic, Levi form = -2.
    fn contact() -> ChartStructure {
        let c = chart1();
        let y = Expr::var(2);
        let mut phi = Tensor11::zero(c.clone());
        // phi(dx) = dy, phi(dy) = -dx - y dt
        phi.m[2][1] = Expr::one();
        phi.m[1][2] = Expr::num(-1.0);
        phi.m[0][2] = Expr::neg(y.clone());
        let eta = KForm::one(
            c.clone(),
            vec![Expr::one(), Expr::neg(y.clone()), Expr::zero()],
        )
        .unwrap();
        // g = eta (x) eta + dx^2 + dy^2
        let mut g = MetricField::euclidean(c.clone()).m;
        g[0][0] = Expr::one();
        g[0][1] = Expr::neg(y.clone());
        g[1][0] = Expr::neg(y.clone());
        g[1][1] = Expr::one() + y.clone() * y.clone();
        ChartStructure::new(
            c.clone(),
            phi,
            VectorField::coordinate(c.clone(), 0),
            eta,
            MetricField::new(c, g).unwrap(),
        )
    }

    fn sample(s: &ChartStructure) -> Sample {
        Sample::draw(&s.chart, 11, 6)
    }

    #[test]
    fn flat_cr_chart_reproduces_flat_structure() {
        let s = flat();
        assert!(check_acm_axioms(&s, &sample(&s), IDENTITY_TOL).unwrap().pass);
        assert!(
            check_almost_cosymplectic(&s, &sample(&s), IDENTITY_TOL)
                .unwrap()
                .pass
        );
        // g is the identity, xi = d/dt
        let p = [0.1, -0.2, 0.3];
        let mut ev = Evaluator::new(&p, &s.params);
        let gm = numeric::eval_metric(&mut ev, &s.g).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((gm[i][j] - Complex::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn section_from_dx_is_twice_z1() {
        let s = flat();
        let x = VectorField::coordinate(s.chart.clone(), 1);
        let sec = dprime_section(&s, &x, &sample(&s), IDENTITY_TOL).unwrap();
        let v = numeric::eval_vf_at(&sec.z, &[0.0, 0.0, 0.0], &s.params).unwrap();
        assert!((v[1] - Complex::new(1.0, 0.0)).norm() < 1e-12);
        assert!((v[2] - Complex::new(0.0, -1.0)).norm() < 1e-12);
    }

    #[test]
    fn section_rejects_xi() {
        let s = flat();
        match dprime_section(&s, &s.xi.clone(), &sample(&s), IDENTITY_TOL) {
            Err(Error::NotHorizontal { .. }) => {}
            other => panic!("expected horizontality rejection, got {other:?}"),
        }
    }

    #[test]
    fn eigenvalue_identity_on_warp_section() {
        let s = warp();
        let x = VectorField::coordinate(s.chart.clone(), 1);
        let sec = dprime_section(&s, &x, &sample(&s), IDENTITY_TOL).unwrap();
        let phiz = s.phi.apply(&sec.z).unwrap();
        let defect = phiz.sub(&sec.z.scale(Expr::i()));
        for p in &sample(&s).points {
            let v = numeric::eval_vf_at(&defect, p, &s.params).unwrap();
            assert!(numeric::vec_norm(&v) < 1e-10);
        }
    }

    #[test]
    fn levi_form_vanishes_on_almost_cosymplectic_fixtures() {
        for s in [flat(), warp()] {
            let x = VectorField::coordinate(s.chart.clone(), 1);
            let sec = dprime_section(&s, &x, &sample(&s), IDENTITY_TOL).unwrap();
            for p in &sample(&s).points {
                let l = levi_form(&s, &sec, p).unwrap();
                assert!(l.abs() < 1e-10, "L = {l}");
            }
        }
    }

    #[test]
    fn levi_form_is_minus_two_on_contact_fixture() {
        let s = contact();
        // X = d/dx + y d/dt is horizontal: eta(X) = -y + y = 0
        let x = VectorField::new(
            s.chart.clone(),
            vec![Expr::var(2), Expr::one(), Expr::zero()],
        )
        .unwrap();
        let sec = dprime_section(&s, &x, &sample(&s), IDENTITY_TOL).unwrap();
        for p in &sample(&s).points {
            let l = levi_form(&s, &sec, p).unwrap();
            assert!((l + 2.0).abs() < 1e-10, "L = {l}");
        }
    }

    #[test]
    fn integrability_trivial_for_one_dimensional_cr() {
        for s in [flat(), warp()] {
            let rep = check_cr_integrability(&s, &sample(&s), IDENTITY_TOL).unwrap();
            assert!(rep.pass);
        }
    }

    #[test]
    fn cr_chart_round_trip() {
        // a = -zbar + (i/2) z  (mu = 1 pattern), g Hermitian constant
        let c = chart1();
        let z = Expr::var(1) + Expr::i() * Expr::var(2);
        let zbar = Expr::conj(z.clone());
        let a = Expr::neg(zbar) + Expr::num(0.5) * Expr::i() * z;
        let data = CRChartData::new(c.clone(), vec![a], vec![vec![Expr::num(0.5)]]).unwrap();
        let s = build_from_cr_chart(&data).unwrap();
        assert!(check_acm_axioms(&s, &sample(&s), IDENTITY_TOL).unwrap().pass);

        let back = extract_cr_data(&s).unwrap();
        let rebuilt = build_from_cr_chart(&back).unwrap();
        let no_params = std::collections::HashMap::new();
        for p in &sample(&s).points {
            let mut e1 = Evaluator::new(p, &no_params);
            let mut e2 = Evaluator::new(p, &no_params);
            for (x, y) in s.g.m.iter().flatten().zip(rebuilt.g.m.iter().flatten()) {
                assert!((e1.eval(x).unwrap() - e2.eval(y).unwrap()).norm() < 1e-10);
            }
            for (x, y) in s.phi.m.iter().flatten().zip(rebuilt.phi.m.iter().flatten()) {
                assert!((e1.eval(x).unwrap() - e2.eval(y).unwrap()).norm() < 1e-10);
            }
            for (x, y) in s.xi.comps.iter().zip(&rebuilt.xi.comps) {
                assert!((e1.eval(x).unwrap() - e2.eval(y).unwrap()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn builder_rejects_non_hermitian_data() {
        let c = Arc::new(ChartDecl::standard(2, (-0.8, 0.8)));
        let mut gh = vec![vec![Expr::zero(); 2]; 2];
        gh[0][0] = Expr::num(0.5);
        gh[1][1] = Expr::num(0.5);
        gh[0][1] = Expr::num(0.1) * Expr::i();
        gh[1][0] = Expr::num(0.1) * Expr::i(); // should be -0.1 i
        let data = CRChartData::new(c, vec![Expr::zero(), Expr::zero()], gh).unwrap();
        match build_from_cr_chart(&data) {
            Err(Error::NotHermitian { .. }) => {}
            other => panic!("expected Hermitian rejection, got {other:?}"),
        }
    }

    #[test]
    fn hermitian_connection_checks_pass_on_fixtures() {
        for s in [flat(), warp()] {
            let rep = check_hermitian_connection(&s, &sample(&s), IDENTITY_TOL).unwrap();
            assert!(rep.pass, "max residual {}", rep.max_residual);
        }
        // verdict agrees with the Kaehlerian-leaves characterization
        for s in [flat(), warp()] {
            assert!(check_kahler_leaves(&s, &sample(&s), IDENTITY_TOL).unwrap().pass);
        }
    }

    #[test]
    fn hermitian_connection_leibniz_rule() {
        let s = warp();
        let sm = sample(&s);
        let hc = hermitian_connection(&s, &sm, IDENTITY_TOL).unwrap();
        let x = VectorField::new(
            s.chart.clone(),
            vec![Expr::one(), Expr::var(0), Expr::sin(Expr::var(1))],
        )
        .unwrap();
        let z = spanning_sections(&s).unwrap().remove(0);
        let f = Expr::var(2) + Expr::i() * Expr::exp(Expr::var(0));
        let lhs = hc.nabla(&x, &z.scale(f.clone())).unwrap();
        let rhs = z
            .scale(x.derive_scalar(&f))
            .add(&hc.nabla(&x, &z).unwrap().scale(f));
        let defect = lhs.sub(&rhs);
        for p in &sm.points {
            let v = numeric::eval_vf_at(&defect, p, &s.params).unwrap();
            assert!(numeric::vec_norm(&v) < 1e-9);
        }
    }
}
