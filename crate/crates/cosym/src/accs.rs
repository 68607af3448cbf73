//! Almost contact metric structures and the identity checkers that go
//! with them: structure axioms, the almost cosymplectic conditions, the
//! normality/cosymplectic triple, the tensors A and h, the Kaehlerian
//! leaves criterion, (kappa, mu, nu) verification and estimation, the
//! D-conformal deformation, and the Perrone invariant.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{Complex, Evaluator, Expr};
use crate::fields::{
    d_scalar, exterior_derivative, lie_bracket, lie_derivative_tensor11, wedge_11, ChartDecl,
    KForm, MetricField, Sample, Tensor11, VectorField,
};
use crate::numeric;
use crate::report::{Residuals, VerificationReport};
use crate::riemann::{
    christoffel, covariant_derivative_t11, covariant_derivative_vf, curvature, tensor_norm,
    ConnectionData, CurvatureData,
};

/// An almost contact metric structure with symbolic components on a chart.
/// Derived data (connection, curvature, A, h) is computed once on demand.
#[derive(Clone, Debug)]
pub struct ChartStructure {
    pub chart: Arc<ChartDecl>,
    pub phi: Tensor11,
    pub xi: VectorField,
    pub eta: KForm,
    pub g: MetricField,
    pub params: HashMap<String, f64>,
    caches: Caches,
}

#[derive(Clone, Debug, Default)]
struct Caches {
    conn: OnceLock<ConnectionData>,
    curv: OnceLock<CurvatureData>,
    a: OnceLock<Tensor11>,
    h: OnceLock<Tensor11>,
}

impl ChartStructure {
    pub fn new(
        chart: Arc<ChartDecl>,
        phi: Tensor11,
        xi: VectorField,
        eta: KForm,
        g: MetricField,
    ) -> ChartStructure {
        assert_eq!(eta.degree(), 1);
        ChartStructure {
            chart,
            phi,
            xi,
            eta,
            g,
            params: HashMap::new(),
            caches: Caches::default(),
        }
    }

    pub fn with_params(mut self, params: HashMap<String, f64>) -> ChartStructure {
        self.params = params;
        self
    }

    pub fn connection(&self) -> Result<&ConnectionData> {
        if self.caches.conn.get().is_none() {
            let c = christoffel(&self.g)?;
            let _ = self.caches.conn.set(c);
        }
        Ok(self.caches.conn.get().unwrap())
    }

    pub fn curvature(&self) -> Result<&CurvatureData> {
        if self.caches.curv.get().is_none() {
            let c = curvature(self.connection()?);
            let _ = self.caches.curv.set(c);
        }
        Ok(self.caches.curv.get().unwrap())
    }

    /// `A = -nabla xi`.
    pub fn tensor_a(&self) -> Result<&Tensor11> {
        if self.caches.a.get().is_none() {
            let conn = self.connection()?;
            let dim = self.chart.dim();
            let mut cols = Vec::with_capacity(dim);
            for i in 0..dim {
                let ei = VectorField::coordinate(self.chart.clone(), i);
                cols.push(
                    covariant_derivative_vf(conn, &ei, &self.xi)?.scale(Expr::num(-1.0)),
                );
            }
            let _ = self
                .caches
                .a
                .set(Tensor11::from_columns(self.chart.clone(), cols));
        }
        Ok(self.caches.a.get().unwrap())
    }

    /// `h = (L_xi phi) / 2`.
    pub fn tensor_h(&self) -> Result<&Tensor11> {
        if self.caches.h.get().is_none() {
            let l = lie_derivative_tensor11(&self.xi, &self.phi)?;
            let _ = self.caches.h.set(l.scale(Expr::num(0.5)));
        }
        Ok(self.caches.h.get().unwrap())
    }

    pub fn eta_comps(&self) -> &[Expr] {
        self.eta.one_comps()
    }

    /// Evaluate (phi, xi, eta, g) at a point.
    pub fn eval_at(&self, point: &[f64]) -> Result<StructureValues> {
        let mut ev = Evaluator::new(point, &self.params);
        Ok(StructureValues {
            phi: numeric::eval_tensor(&mut ev, &self.phi)?,
            xi: numeric::eval_vf(&mut ev, &self.xi)?,
            eta: self
                .eta_comps()
                .iter()
                .map(|e| Ok(ev.eval(e)?))
                .collect::<Result<Vec<_>>>()?,
            g: numeric::eval_metric(&mut ev, &self.g)?,
        })
    }
}

/// Structure tensors evaluated at one point.
pub struct StructureValues {
    pub phi: Vec<Vec<Complex>>,
    pub xi: Vec<Complex>,
    pub eta: Vec<Complex>,
    pub g: Vec<Vec<Complex>>,
}

/// Residuals of the four structure axioms
/// (`phi^2 = -I + eta (x) xi`, `eta(xi) = 1`, `eta = g(., xi)`,
/// `g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)`) on coordinate basis
/// fields at every sampled point.
pub fn check_acm_axioms(
    s: &ChartStructure,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    let dim = s.chart.dim();
    let mut res = Residuals::new("acm-axioms", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let v = s.eval_at(p)?;
        // phi^2 + I - eta (x) xi
        for k in 0..dim {
            for j in 0..dim {
                let mut phi2 = Complex::new(0.0, 0.0);
                for l in 0..dim {
                    phi2 += v.phi[k][l] * v.phi[l][j];
                }
                let id = Complex::new(if k == j { 1.0 } else { 0.0 }, 0.0);
                res.record((phi2 + id - v.xi[k] * v.eta[j]).norm());
            }
        }
        // eta(xi) = 1
        let exi: Complex = v.eta.iter().zip(&v.xi).map(|(a, b)| a * b).sum();
        res.record((exi - Complex::new(1.0, 0.0)).norm());
        // eta(X) = g(X, xi)
        for j in 0..dim {
            let gxj: Complex = (0..dim).map(|i| v.g[j][i] * v.xi[i]).sum();
            res.record((v.eta[j] - gxj).norm());
        }
        // compatibility
        for i in 0..dim {
            for j in 0..dim {
                let mut gphi = Complex::new(0.0, 0.0);
                for k in 0..dim {
                    for l in 0..dim {
                        gphi += v.phi[k][i] * v.g[k][l] * v.phi[l][j];
                    }
                }
                res.record((gphi - v.g[i][j] + v.eta[i] * v.eta[j]).norm());
            }
        }
    }
    Ok(res.finish())
}

/// The fundamental 2-form `Phi(X, Y) = g(phi X, Y)` (antisymmetrized
/// structurally).
pub fn fundamental_form(s: &ChartStructure) -> KForm {
    let dim = s.chart.dim();
    KForm::two_from(s.chart.clone(), |i, j| {
        Expr::sum(
            (0..dim)
                .map(|k| s.phi.m[k][i].clone() * s.g.m[k][j].clone())
                .collect(),
        )
    })
}

/// Residuals of `d eta = 0` and `d Phi = 0`.
pub fn check_almost_cosymplectic(
    s: &ChartStructure,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    let deta = exterior_derivative(&s.eta)?;
    let dphi = exterior_derivative(&fundamental_form(s))?;
    let mut res = Residuals::new("almost-cosymplectic", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let mut ev = Evaluator::new(p, &s.params);
        for e in deta.components().iter().chain(dphi.components()) {
            res.record(ev.eval(e)?.norm());
        }
    }
    Ok(res.finish())
}

/// Nijenhuis torsion of phi, precomputed on coordinate basis pairs.
pub struct NijenhuisEval {
    chart: Arc<ChartDecl>,
    /// fields for pairs (i, j), i < j
    pairs: Vec<VectorField>,
}

impl NijenhuisEval {
    /// `N_phi(d_i, d_j)` with sign; zero field for i = j.
    pub fn at_pair(&self, i: usize, j: usize) -> VectorField {
        use std::cmp::Ordering::*;
        let dim = self.chart.dim();
        match i.cmp(&j) {
            Less => self.pairs[crate::fields::pair_index(dim, i, j)].clone(),
            Equal => VectorField::zero(self.chart.clone()),
            Greater => self.pairs[crate::fields::pair_index(dim, j, i)]
                .clone()
                .scale(Expr::num(-1.0)),
        }
    }
}

/// `N_phi(X, Y) = phi^2 [X, Y] + [phi X, phi Y] - phi [phi X, Y]
///  - phi [X, phi Y]`; coordinate brackets `[d_i, d_j]` vanish.
pub fn nijenhuis(s: &ChartStructure) -> Result<NijenhuisEval> {
    let dim = s.chart.dim();
    let cols: Vec<VectorField> = (0..dim).map(|i| s.phi.column(i)).collect();
    let mut pairs = Vec::with_capacity(dim * (dim - 1) / 2);
    for i in 0..dim {
        for j in (i + 1)..dim {
            let ei = VectorField::coordinate(s.chart.clone(), i);
            let ej = VectorField::coordinate(s.chart.clone(), j);
            let t1 = lie_bracket(&cols[i], &cols[j])?;
            let t2 = s.phi.apply(&lie_bracket(&cols[i], &ej)?)?;
            let t3 = s.phi.apply(&lie_bracket(&ei, &cols[j])?)?;
            pairs.push(t1.sub(&t2).sub(&t3));
        }
    }
    Ok(NijenhuisEval {
        chart: s.chart.clone(),
        pairs,
    })
}

/// Residual of the normality condition `N_phi + 2 d eta (x) xi = 0`.
pub fn check_normal(
    s: &ChartStructure,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    let nij = nijenhuis(s)?;
    let deta = exterior_derivative(&s.eta)?;
    let dim = s.chart.dim();
    let mut res = Residuals::new("normality", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let mut ev = Evaluator::new(p, &s.params);
        let xiv = numeric::eval_vf(&mut ev, &s.xi)?;
        for i in 0..dim {
            for j in (i + 1)..dim {
                let nv = numeric::eval_vf(&mut ev, &nij.at_pair(i, j))?;
                let dv = ev.eval(&deta.at_pair(i, j))?;
                for l in 0..dim {
                    res.record((nv[l] + 2.0 * dv * xiv[l]).norm());
                }
            }
        }
    }
    Ok(res.finish())
}

/// The three equivalent cosymplectic criteria, checked independently.
#[derive(Clone, Debug, Serialize)]
pub struct CosymplecticReport {
    pub normality: VerificationReport,
    pub nabla_phi: VerificationReport,
    pub goldberg_yano: VerificationReport,
    /// whether the three verdicts coincide
    pub verdicts_agree: bool,
}

/// Checks normality (Eq. of `N_phi`), `nabla phi = 0` (Blair) and
/// `R(X,Y) phi = phi R(X,Y)` (Goldberg-Yano) and reports whether the
/// three verdicts coincide.
pub fn check_cosymplectic(
    s: &ChartStructure,
    sample: &Sample,
    tolerance: f64,
) -> Result<CosymplecticReport> {
    let normality = check_normal(s, sample, tolerance)?;

    let conn = s.connection()?;
    let dim = s.chart.dim();
    let nabla_phi_tensors: Vec<Tensor11> = (0..dim)
        .map(|i| {
            let ei = VectorField::coordinate(s.chart.clone(), i);
            covariant_derivative_t11(conn, &ei, &s.phi)
        })
        .collect::<Result<_>>()?;
    let mut res = Residuals::new("nabla-phi", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let mut ev = Evaluator::new(p, &s.params);
        for t in &nabla_phi_tensors {
            for row in &t.m {
                for e in row {
                    res.record(ev.eval(e)?.norm());
                }
            }
        }
    }
    let nabla_phi = res.finish();

    let curv = s.curvature()?;
    let mut res = Residuals::new("goldberg-yano", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let mut ev = Evaluator::new(p, &s.params);
        let phiv = numeric::eval_tensor(&mut ev, &s.phi)?;
        for i in 0..dim {
            for j in (i + 1)..dim {
                // matrix of R(d_i, d_j)
                let mut r = vec![vec![Complex::new(0.0, 0.0); dim]; dim];
                for l in 0..dim {
                    for k in 0..dim {
                        r[l][k] = ev.eval(&curv.riem[l][i][j][k])?;
                    }
                }
                for l in 0..dim {
                    for k in 0..dim {
                        let mut rphi = Complex::new(0.0, 0.0);
                        let mut phir = Complex::new(0.0, 0.0);
                        for m in 0..dim {
                            rphi += r[l][m] * phiv[m][k];
                            phir += phiv[l][m] * r[m][k];
                        }
                        res.record((rphi - phir).norm());
                    }
                }
            }
        }
    }
    let goldberg_yano = res.finish();

    let verdicts_agree =
        normality.pass == nabla_phi.pass && nabla_phi.pass == goldberg_yano.pass;
    Ok(CosymplecticReport {
        normality,
        nabla_phi,
        goldberg_yano,
        verdicts_agree,
    })
}

/// Residual of the Kaehlerian-leaves characterization
/// `(nabla_X phi) Y = -g(phi A X, Y) xi + eta(Y) phi A X`.
pub fn check_kahler_leaves(
    s: &ChartStructure,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    let conn = s.connection()?;
    let dim = s.chart.dim();
    let a = s.tensor_a()?;
    let phi_a = s.phi.compose(a)?;
    let nabla_phi: Vec<Tensor11> = (0..dim)
        .map(|i| {
            let ei = VectorField::coordinate(s.chart.clone(), i);
            covariant_derivative_t11(conn, &ei, &s.phi)
        })
        .collect::<Result<_>>()?;
    let mut res = Residuals::new("kahler-leaves", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let mut ev = Evaluator::new(p, &s.params);
        let gv = numeric::eval_metric(&mut ev, &s.g)?;
        let xiv = numeric::eval_vf(&mut ev, &s.xi)?;
        let etav: Vec<Complex> = s
            .eta_comps()
            .iter()
            .map(|e| ev.eval(e))
            .collect::<std::result::Result<_, _>>()?;
        let phiav = numeric::eval_tensor(&mut ev, &phi_a)?;
        for i in 0..dim {
            let np = numeric::eval_tensor(&mut ev, &nabla_phi[i])?;
            // phi A d_i
            let pai: Vec<Complex> = (0..dim).map(|k| phiav[k][i]).collect();
            for j in 0..dim {
                // g(phi A d_i, d_j)
                let gpai: Complex = (0..dim).map(|k| gv[k][j] * pai[k]).sum();
                for l in 0..dim {
                    let lhs = np[l][j];
                    let rhs = -gpai * xiv[l] + etav[j] * pai[l];
                    res.record((lhs - rhs).norm());
                }
            }
        }
    }
    Ok(res.finish())
}

/// Builds the tensor `P = kappa Id + mu h + nu A` pointwise.
fn p_tensor_at(
    s: &ChartStructure,
    kappa: &Expr,
    mu: &Expr,
    nu: &Expr,
    p: &[f64],
) -> Result<Vec<Vec<Complex>>> {
    let dim = s.chart.dim();
    let mut ev = Evaluator::new(p, &s.params);
    let hv = numeric::eval_tensor(&mut ev, s.tensor_h()?)?;
    let av = numeric::eval_tensor(&mut ev, s.tensor_a()?)?;
    let k = ev.eval(kappa)?;
    let m = ev.eval(mu)?;
    let n = ev.eval(nu)?;
    let mut out = vec![vec![Complex::new(0.0, 0.0); dim]; dim];
    for r in 0..dim {
        for c in 0..dim {
            let id = Complex::new(if r == c { 1.0 } else { 0.0 }, 0.0);
            out[r][c] = k * id + m * hv[r][c] + n * av[r][c];
        }
    }
    Ok(out)
}

/// Residual of the nullity condition
/// `R(X, Y) xi = eta(Y) P X - eta(X) P Y` with `P = kappa Id + mu h + nu A`,
/// plus the wedge conditions `d kappa ^ eta = d mu ^ eta = d nu ^ eta = 0`.
pub fn check_kmn(
    s: &ChartStructure,
    kappa: &Expr,
    mu: &Expr,
    nu: &Expr,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    let curv = s.curvature()?;
    let dim = s.chart.dim();
    let wedges: Vec<KForm> = [kappa, mu, nu]
        .into_iter()
        .map(|f| wedge_11(&d_scalar(&s.chart, f), &s.eta))
        .collect::<Result<_>>()?;
    let mut res = Residuals::new("kmn-nullity", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let mut ev = Evaluator::new(p, &s.params);
        let xiv = numeric::eval_vf(&mut ev, &s.xi)?;
        let etav: Vec<Complex> = s
            .eta_comps()
            .iter()
            .map(|e| ev.eval(e))
            .collect::<std::result::Result<_, _>>()?;
        let pv = p_tensor_at(s, kappa, mu, nu, p)?;
        for i in 0..dim {
            for j in (i + 1)..dim {
                for l in 0..dim {
                    // R(d_i, d_j) xi
                    let mut rxi = Complex::new(0.0, 0.0);
                    for k in 0..dim {
                        rxi += ev.eval(&curv.riem[l][i][j][k])? * xiv[k];
                    }
                    let rhs = etav[j] * pv[l][i] - etav[i] * pv[l][j];
                    res.record((rxi - rhs).norm());
                }
            }
        }
        for w in &wedges {
            for e in w.components() {
                res.record(ev.eval(e)?.norm());
            }
        }
    }
    Ok(res.finish())
}

/// Fitted nullity coefficients at one point.  Components that the sample
/// point cannot determine (rank-deficient Gram matrix) are `None`.
#[derive(Clone, Debug, Serialize)]
pub struct KMNResult {
    pub kappa: Option<f64>,
    pub mu: Option<f64>,
    pub nu: Option<f64>,
    pub residual: f64,
    pub underdetermined: bool,
}

/// Least-squares inversion of the nullity condition at a point: builds a
/// g-orthonormal basis `e_a` of `ker eta`, computes `P e_a = -R(xi, e_a) xi`
/// and fits `P e_a ~ kappa e_a + mu h e_a + nu A e_a`.
pub fn estimate_kmn(s: &ChartStructure, point: &[f64]) -> Result<KMNResult> {
    estimate_kmn_ordered(s, point, None)
}

/// Same as [`estimate_kmn`] but with an explicit ordering of the
/// coordinate fields fed to Gram-Schmidt (used to test basis
/// independence).
pub fn estimate_kmn_ordered(
    s: &ChartStructure,
    point: &[f64],
    order: Option<&[usize]>,
) -> Result<KMNResult> {
    let dim = s.chart.dim();
    let mut ev = Evaluator::new(point, &s.params);
    let gv = numeric::eval_metric(&mut ev, &s.g)?;
    if !numeric::is_positive_definite(&gv) {
        return Err(Error::NotPositiveDefinite {
            point: point.to_vec(),
        });
    }
    let xiv = numeric::eval_vf(&mut ev, &s.xi)?;
    let etav: Vec<Complex> = s
        .eta_comps()
        .iter()
        .map(|e| ev.eval(e))
        .collect::<std::result::Result<_, _>>()?;
    // horizontal projections of the coordinate basis
    let default_order: Vec<usize> = (0..dim).collect();
    let order = order.unwrap_or(&default_order);
    let candidates: Vec<Vec<Complex>> = order
        .iter()
        .map(|&k| {
            (0..dim)
                .map(|l| {
                    let id = Complex::new(if l == k { 1.0 } else { 0.0 }, 0.0);
                    id - etav[k] * xiv[l]
                })
                .collect()
        })
        .collect();
    let basis = numeric::gram_schmidt(&gv, &candidates, point)?;

    let curv = s.curvature()?;
    let hv = numeric::eval_tensor(&mut ev, s.tensor_h()?)?;
    let av = numeric::eval_tensor(&mut ev, s.tensor_a()?)?;
    // r4[l][i][j][k] at this point
    let mut rv = vec![vec![vec![vec![Complex::new(0.0, 0.0); dim]; dim]; dim]; dim];
    for l in 0..dim {
        for i in 0..dim {
            for j in 0..dim {
                if i == j {
                    continue;
                }
                for k in 0..dim {
                    rv[l][i][j][k] = ev.eval(&curv.riem[l][i][j][k])?;
                }
            }
        }
    }
    let apply_r = |x: &[Complex], y: &[Complex], z: &[Complex]| -> Vec<Complex> {
        let mut out = vec![Complex::new(0.0, 0.0); dim];
        for l in 0..dim {
            for i in 0..dim {
                for j in 0..dim {
                    if i == j {
                        continue;
                    }
                    for k in 0..dim {
                        out[l] += rv[l][i][j][k] * x[i] * y[j] * z[k];
                    }
                }
            }
        }
        out
    };

    // normal equations over (kappa, mu, nu)
    let mut m = vec![vec![0.0f64; 3]; 3];
    let mut rhs = vec![0.0f64; 3];
    let mut targets = Vec::new();
    let mut designs = Vec::new();
    for e in &basis {
        let pe: Vec<Complex> = apply_r(&xiv, e, &xiv)
            .iter()
            .map(|v| -v)
            .collect();
        let he = numeric::mat_vec(&hv, e);
        let ae = numeric::mat_vec(&av, e);
        let cols = [e.clone(), he, ae];
        for r in 0..3 {
            for c in 0..3 {
                m[r][c] += numeric::g_inner(&gv, &cols[r], &cols[c]).re;
            }
            rhs[r] += numeric::g_inner(&gv, &cols[r], &pe).re;
        }
        targets.push(pe);
        designs.push(cols);
    }
    let fit = numeric::solve_normal_equations(&m, &rhs, 1e-9);
    let mut residual_sq = 0.0;
    for (pe, cols) in targets.iter().zip(&designs) {
        let mut diff = pe.clone();
        for (c, col) in fit.solution.iter().zip(cols.iter()) {
            for (d, v) in diff.iter_mut().zip(col) {
                *d -= Complex::new(*c, 0.0) * v;
            }
        }
        residual_sq += numeric::g_inner(&gv, &diff, &diff).re.abs();
    }
    let pick = |k: usize| {
        if fit.determined[k] {
            Some(fit.solution[k])
        } else {
            None
        }
    };
    Ok(KMNResult {
        kappa: pick(0),
        mu: pick(1),
        nu: pick(2),
        residual: residual_sq.sqrt(),
        underdetermined: fit.determined.iter().any(|d| !d),
    })
}

/// Residuals of the derived relations
/// `A^2 = -kappa (Id - eta (x) xi)`, `nabla_xi A = mu h + nu A`,
/// `d kappa (xi) = 2 nu kappa`.
pub fn check_kmn_relations(
    s: &ChartStructure,
    kappa: &Expr,
    mu: &Expr,
    nu: &Expr,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    let dim = s.chart.dim();
    let a = s.tensor_a()?;
    let h = s.tensor_h()?;
    let a2 = a.compose(a)?;
    let nabla_xi_a = covariant_derivative_t11(s.connection()?, &s.xi, a)?;
    let dkappa_xi = s.xi.derive_scalar(kappa);
    let mut res = Residuals::new("kmn-relations", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let mut ev = Evaluator::new(p, &s.params);
        let kv = ev.eval(kappa)?;
        let mv = ev.eval(mu)?;
        let nv = ev.eval(nu)?;
        let xiv = numeric::eval_vf(&mut ev, &s.xi)?;
        let etav: Vec<Complex> = s
            .eta_comps()
            .iter()
            .map(|e| ev.eval(e))
            .collect::<std::result::Result<_, _>>()?;
        let a2v = numeric::eval_tensor(&mut ev, &a2)?;
        let nav = numeric::eval_tensor(&mut ev, &nabla_xi_a)?;
        let hv = numeric::eval_tensor(&mut ev, h)?;
        let av = numeric::eval_tensor(&mut ev, a)?;
        for r in 0..dim {
            for c in 0..dim {
                let id = Complex::new(if r == c { 1.0 } else { 0.0 }, 0.0);
                res.record((a2v[r][c] + kv * (id - xiv[r] * etav[c])).norm());
                res.record((nav[r][c] - mv * hv[r][c] - nv * av[r][c]).norm());
            }
        }
        res.record((ev.eval(&dkappa_xi)? - 2.0 * nv * kv).norm());
    }
    Ok(res.finish())
}

/// D-conformal deformation `phi' = phi`, `xi' = xi / beta`,
/// `eta' = beta eta`, `g' = alpha g + (beta^2 - alpha) eta (x) eta`.
/// `alpha` must be a positive constant and `beta` must satisfy
/// `d beta ^ eta = 0` at the sampled points (checked, else rejected).
pub fn d_conformal_deform(
    s: &ChartStructure,
    alpha: f64,
    beta: &Expr,
    sample: &Sample,
    tolerance: f64,
) -> Result<ChartStructure> {
    if alpha <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "deformation constant alpha must be positive, got {alpha}"
        )));
    }
    let wedge = wedge_11(&d_scalar(&s.chart, beta), &s.eta)?;
    let mut max = 0.0f64;
    for p in &sample.points {
        let mut ev = Evaluator::new(p, &s.params);
        let b = ev.eval(beta)?;
        if b.re <= 0.0 || b.im.abs() > tolerance {
            return Err(Error::InvalidInput(
                "deformation function beta must be real and positive on the sample".into(),
            ));
        }
        for e in wedge.components() {
            max = max.max(ev.eval(e)?.norm());
        }
    }
    if max > tolerance {
        return Err(Error::DeformationNotAdmissible { residual: max });
    }

    let dim = s.chart.dim();
    let eta_c = s.eta_comps();
    let new_eta = KForm::one(
        s.chart.clone(),
        eta_c.iter().map(|e| beta.clone() * e.clone()).collect(),
    )?;
    let new_xi = VectorField::new(
        s.chart.clone(),
        s.xi
            .comps
            .iter()
            .map(|c| Expr::quot(c.clone(), beta.clone()))
            .collect(),
    )?;
    let weight = Expr::int_pow(beta.clone(), 2) - Expr::num(alpha);
    let mut gm = vec![vec![Expr::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            gm[i][j] = Expr::num(alpha) * s.g.m[i][j].clone()
                + weight.clone() * eta_c[i].clone() * eta_c[j].clone();
        }
    }
    let g = MetricField::new(s.chart.clone(), gm)?;
    Ok(
        ChartStructure::new(s.chart.clone(), s.phi.clone(), new_xi, new_eta, g)
            .with_params(s.params.clone()),
    )
}

/// Perrone's invariant `p = ||L_xi h|| - 2 ||h||^2` at a point (n = 1
/// only).  [`perrone_p_both`] additionally reports the squared reading
/// `||L_xi h||^2 - 2 ||h||^2` for diagnostics.
pub fn perrone_p(s: &ChartStructure, point: &[f64]) -> Result<f64> {
    Ok(perrone_p_both(s, point)?.0)
}

pub fn perrone_p_both(s: &ChartStructure, point: &[f64]) -> Result<(f64, f64)> {
    if s.chart.n() != 1 {
        return Err(Error::UnsupportedCrDimension(s.chart.n()));
    }
    let h = s.tensor_h()?;
    let lh = lie_derivative_tensor11(&s.xi, h)?;
    let norm_lh = tensor_norm(&s.g, &lh, point, &s.params)?;
    let norm_h = tensor_norm(&s.g, h, point, &s.params)?;
    let literal = norm_lh - 2.0 * norm_h * norm_h;
    let squared = norm_lh * norm_lh - 2.0 * norm_h * norm_h;
    Ok((literal, squared))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::IDENTITY_TOL;

    fn chart1() -> Arc<ChartDecl> {
        Arc::new(ChartDecl::standard(1, (-0.8, 0.8)))
    }

    /// Flat structure on R^3: g = Id, xi = d/dt, eta = dt,
    /// phi dx = dy, phi dy = -dx.
    fn flat() -> ChartStructure {
        let c = chart1();
        let mut phi = Tensor11::zero(c.clone());
        phi.m[2][1] = Expr::one();
        phi.m[1][2] = Expr::num(-1.0);
        ChartStructure::new(
            c.clone(),
            phi,
            VectorField::coordinate(c.clone(), 0),
            KForm::one(c.clone(), vec![Expr::one(), Expr::zero(), Expr::zero()]).unwrap(),
            MetricField::euclidean(c),
        )
    }

    /// The exponential-warp structure: g = dt^2 + e^{-2t} dx^2 + e^{2t} dy^2,
    /// xi = d/dt, eta = dt, phi dx = e^{-2t} dy, phi dy = -e^{2t} dx.
    /// Almost cosymplectic but not normal; nullity with kappa = -1.
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

    fn sample(s: &ChartStructure) -> Sample {
        Sample::draw(&s.chart, 7, 6)
    }

    #[test]
    fn axioms_hold_on_both_fixtures() {
        for s in [flat(), warp()] {
            let rep = check_acm_axioms(&s, &sample(&s), IDENTITY_TOL).unwrap();
            assert!(rep.pass, "max residual {}", rep.max_residual);
        }
    }

    #[test]
    fn axioms_reject_scaled_metric() {
        let mut s = warp();
        let m = s
            .g
            .m
            .iter()
            .map(|row| row.iter().map(|e| Expr::num(2.0) * e.clone()).collect())
            .collect();
        s.g = MetricField::new(s.chart.clone(), m).unwrap();
        let rep = check_acm_axioms(&s, &sample(&s), IDENTITY_TOL).unwrap();
        assert!(!rep.pass);
    }

    #[test]
    fn both_fixtures_are_almost_cosymplectic() {
        for s in [flat(), warp()] {
            let rep = check_almost_cosymplectic(&s, &sample(&s), IDENTITY_TOL).unwrap();
            assert!(rep.pass, "max residual {}", rep.max_residual);
        }
    }

    #[test]
    fn nonclosed_fundamental_form_is_detected() {
        // g_yy = e^{2t} + t makes Phi_xy = e^{-2t}(e^{2t} + t) depend on t
        let mut s = warp();
        let mut m = s.g.m.clone();
        m[2][2] = Expr::exp(Expr::num(2.0) * Expr::var(0)) + Expr::var(0);
        s.g = MetricField::new(s.chart.clone(), m).unwrap();
        let rep = check_almost_cosymplectic(&s, &sample(&s), IDENTITY_TOL).unwrap();
        assert!(!rep.pass);
    }

    #[test]
    fn cosymplectic_criteria_agree_on_flat_and_warp() {
        let rep = check_cosymplectic(&flat(), &sample(&flat()), IDENTITY_TOL).unwrap();
        assert!(rep.normality.pass && rep.nabla_phi.pass && rep.goldberg_yano.pass);
        assert!(rep.verdicts_agree);

        let rep = check_cosymplectic(&warp(), &sample(&warp()), IDENTITY_TOL).unwrap();
        assert!(!rep.normality.pass && !rep.nabla_phi.pass && !rep.goldberg_yano.pass);
        assert!(rep.verdicts_agree);
    }

    #[test]
    fn warp_tensors_a_and_h() {
        let s = warp();
        let p = [0.3, -0.2, 0.5];
        let mut ev = Evaluator::new(&p, &s.params);
        let av = numeric::eval_tensor(&mut ev, s.tensor_a().unwrap()).unwrap();
        // A dt = 0, A dx = dx, A dy = -dy
        for k in 0..3 {
            assert!(av[k][0].norm() < 1e-12);
            let ex = if k == 1 { 1.0 } else { 0.0 };
            assert!((av[k][1] - Complex::new(ex, 0.0)).norm() < 1e-12);
            let ey = if k == 2 { -1.0 } else { 0.0 };
            assert!((av[k][2] - Complex::new(ey, 0.0)).norm() < 1e-12);
        }
        // h dx = -e^{-2t} dy, h dy = -e^{2t} dx
        let hv = numeric::eval_tensor(&mut ev, s.tensor_h().unwrap()).unwrap();
        let e2t = f64::exp(2.0 * p[0]);
        assert!((hv[2][1] - Complex::new(-1.0 / e2t, 0.0)).norm() < 1e-12);
        assert!((hv[1][2] - Complex::new(-e2t, 0.0)).norm() < 1e-12);
        assert!(hv[0].iter().all(|v| v.norm() < 1e-12));
    }

    #[test]
    fn kahler_leaves_identity_holds() {
        for s in [flat(), warp()] {
            let rep = check_kahler_leaves(&s, &sample(&s), IDENTITY_TOL).unwrap();
            assert!(rep.pass, "max residual {}", rep.max_residual);
        }
    }

    #[test]
    fn warp_is_a_nullity_space() {
        let s = warp();
        let rep = check_kmn(
            &s,
            &Expr::num(-1.0),
            &Expr::zero(),
            &Expr::zero(),
            &sample(&s),
            IDENTITY_TOL,
        )
        .unwrap();
        assert!(rep.pass, "max residual {}", rep.max_residual);
        // wrong kappa is rejected
        let bad = check_kmn(
            &s,
            &Expr::num(-0.5),
            &Expr::zero(),
            &Expr::zero(),
            &sample(&s),
            IDENTITY_TOL,
        )
        .unwrap();
        assert!(!bad.pass);
    }

    #[test]
    fn nullity_relations_hold_on_warp() {
        let s = warp();
        let rep = check_kmn_relations(
            &s,
            &Expr::num(-1.0),
            &Expr::zero(),
            &Expr::zero(),
            &sample(&s),
            IDENTITY_TOL,
        )
        .unwrap();
        assert!(rep.pass, "max residual {}", rep.max_residual);
    }

    #[test]
    fn estimate_recovers_coefficients_on_warp() {
        let s = warp();
        let r = estimate_kmn(&s, &[0.25, 0.4, -0.3]).unwrap();
        assert!(!r.underdetermined);
        assert!((r.kappa.unwrap() + 1.0).abs() < 1e-8);
        assert!(r.mu.unwrap().abs() < 1e-8);
        assert!(r.nu.unwrap().abs() < 1e-8);
        assert!(r.residual < 1e-8);
    }

    #[test]
    fn estimate_underdetermined_on_flat() {
        // flat: h = A = 0, so mu and nu cannot be identified
        let r = estimate_kmn(&flat(), &[0.1, 0.2, 0.3]).unwrap();
        assert!(r.underdetermined);
        assert!((r.kappa.unwrap()).abs() < 1e-10);
        assert!(r.mu.is_none() && r.nu.is_none());
        assert!(r.residual < 1e-10);
    }

    #[test]
    fn deformation_rescales_nullity_coefficients() {
        let s = warp();
        let sm = sample(&s);
        let d = d_conformal_deform(&s, 1.0, &Expr::num(2.0), &sm, IDENTITY_TOL).unwrap();
        let rep = check_acm_axioms(&d, &sm, IDENTITY_TOL).unwrap();
        assert!(rep.pass, "max residual {}", rep.max_residual);
        // kappa' = kappa / beta^2 = -1/4 for constant beta = 2
        let rep = check_kmn(
            &d,
            &Expr::num(-0.25),
            &Expr::zero(),
            &Expr::zero(),
            &sm,
            IDENTITY_TOL,
        )
        .unwrap();
        assert!(rep.pass, "max residual {}", rep.max_residual);
        let r = estimate_kmn(&d, &[0.15, -0.3, 0.2]).unwrap();
        assert!((r.kappa.unwrap() + 0.25).abs() < 1e-8);
    }

    #[test]
    fn deformation_rejects_nonadmissible_beta() {
        let s = warp();
        let sm = sample(&s);
        // beta = 2 + x1 has d beta ^ eta != 0
        let beta = Expr::num(2.0) + Expr::var(1);
        match d_conformal_deform(&s, 1.0, &beta, &sm, IDENTITY_TOL) {
            Err(Error::DeformationNotAdmissible { .. }) => {}
            other => panic!("expected admissibility rejection, got {other:?}"),
        }
        assert!(d_conformal_deform(&s, -1.0, &Expr::num(2.0), &sm, IDENTITY_TOL).is_err());
    }

    #[test]
    fn perrone_invariant_closed_form_at_mu_zero() {
        // literal reading: ||L_xi h|| - 2 ||h||^2 = 2 sqrt(2) - 4
        let s = warp();
        let (literal, squared) = perrone_p_both(&s, &[0.2, 0.1, -0.4]).unwrap();
        let expected = 2.0 * f64::sqrt(2.0) - 4.0;
        assert!((literal - expected).abs() < 1e-9, "got {literal}");
        // squared reading would give 8 - 4 = 4
        assert!((squared - 4.0).abs() < 1e-9);
        assert!(perrone_p(&flat(), &[0.0, 0.0, 0.0]).unwrap().abs() < 1e-10);
    }
}
