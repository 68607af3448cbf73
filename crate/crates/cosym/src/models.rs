//! The model-space zoo: the nullity model structures with kappa = -1 in
//! all three frame cases, the same family in its global CR realization,
//! the flat baseline, and two negative controls used to prove the
//! checkers can fail.
//!
//! Every model is assembled the same way: declare an orthonormal frame
//! `(xi, X_1..X_n, Y_1..Y_n)` by its coordinate components, inverting the
//! frame matrix symbolically to obtain eta, g and phi.

use std::sync::Arc;

use crate::accs::ChartStructure;
use crate::cr::CRChartData;
use crate::error::{Error, Result};
use crate::expr::{Evaluator, Expr};
use crate::fields::{lie_bracket, ChartDecl, KForm, MetricField, Sample, Tensor11, VectorField};
use crate::report::{Residuals, VerificationReport};
use crate::riemann::invert_symbolic;

/// How a model structure is realized in coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realization {
    /// Flat baseline: `g = Id`, `xi = d/dt`, standard phi.
    Flat,
    /// Frame realization of the nullity models; the frame case is chosen
    /// automatically from |mu| vs 2, with exact equality routed to the
    /// linear frame.
    FrameAuto,
    /// Global CR realization of the same family.
    GlobalCr,
    /// Negative control (n = 2): almost cosymplectic with a twisted,
    /// non-integrable complex structure on the leaves.
    ControlTwisted,
    /// Negative control (n = 1): contact-type `eta = dt - y dx`, which is
    /// not almost cosymplectic and has nonzero Levi form.
    ControlContact,
}

/// Selector for a builtin model.
#[derive(Clone, Copy, Debug)]
pub struct ModelSpec {
    pub n: usize,
    pub mu: f64,
    pub realization: Realization,
}

/// Registry names accepted by [`ModelSpec::from_name`], with one-line
/// descriptions.
pub fn registry() -> Vec<(&'static str, &'static str)> {
    vec![
        ("flat", "flat baseline: g = Id, xi = d/dt (mu ignored)"),
        (
            "model-frame",
            "nullity model, orthonormal-frame realization; frame case picked from |mu| vs 2",
        ),
        (
            "model-global-cr",
            "nullity model, global CR realization with xi transversal to the leaves",
        ),
        (
            "control-twisted",
            "negative control (n = 2): almost cosymplectic, leaves not complex-integrable",
        ),
        (
            "control-contact",
            "negative control (n = 1): contact-type eta = dt - y dx, Levi form = -2",
        ),
    ]
}

impl ModelSpec {
    pub fn from_name(name: &str, n: usize, mu: f64) -> Result<ModelSpec> {
        let realization = match name {
            "flat" => Realization::Flat,
            "model-frame" => Realization::FrameAuto,
            "model-global-cr" => Realization::GlobalCr,
            "control-twisted" => Realization::ControlTwisted,
            "control-contact" => Realization::ControlContact,
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown model '{other}'; known models: {}",
                    registry()
                        .iter()
                        .map(|(k, _)| *k)
                        .collect::<Vec<_>>()
                        .join(", ")
                )))
            }
        };
        if n < 1 {
            return Err(Error::InvalidInput("n must be >= 1".into()));
        }
        match realization {
            Realization::ControlTwisted if n != 2 => {
                return Err(Error::InvalidInput(
                    "control-twisted is defined for n = 2".into(),
                ))
            }
            Realization::ControlContact if n != 1 => {
                return Err(Error::InvalidInput(
                    "control-contact is defined for n = 1".into(),
                ))
            }
            _ => {}
        }
        Ok(ModelSpec { n, mu, realization })
    }
}

/// Chart with the default sampling box, chosen to keep the trig frame
/// away from its periodic degeneracies and the exponentials
/// well-conditioned.
pub fn default_chart(n: usize) -> Arc<ChartDecl> {
    Arc::new(ChartDecl::standard(n, (-0.8, 0.8)))
}

/// The (f_xx, f_xy, f_yx, f_yy) component functions of one frame block:
/// `X_i = f_xx dx + f_yx dy`, `Y_i = f_xy dx + f_yy dy`.
fn frame_block(mu: f64) -> [Expr; 4] {
    let t = Expr::var(0);
    let half_mu = mu / 2.0;
    if mu.abs() < 2.0 {
        let w = (1.0 - mu * mu / 4.0).sqrt();
        let c = Expr::cosh(Expr::num(w) * t.clone());
        let s = Expr::sinh(Expr::num(w) * t);
        [
            c.clone() + Expr::num(1.0 / w) * s.clone(),
            Expr::num(half_mu / w) * s.clone(),
            Expr::num(-half_mu / w) * s.clone(),
            c - Expr::num(1.0 / w) * s,
        ]
    } else if mu.abs() == 2.0 {
        let eps = half_mu;
        [
            Expr::one() + t.clone(),
            Expr::num(eps) * t.clone(),
            Expr::num(-eps) * t.clone(),
            Expr::one() - t,
        ]
    } else {
        let w = (mu * mu / 4.0 - 1.0).sqrt();
        let c = Expr::cos(Expr::num(w) * t.clone());
        let s = Expr::sin(Expr::num(w) * t);
        [
            c.clone() + Expr::num(1.0 / w) * s.clone(),
            Expr::num(half_mu / w) * s.clone(),
            Expr::num(-half_mu / w) * s.clone(),
            c - Expr::num(1.0 / w) * s,
        ]
    }
}

/// The frame `(xi, X_1..X_n, Y_1..Y_n)` of a model, by realization.
pub fn frame_fields(spec: &ModelSpec) -> Result<Vec<VectorField>> {
    let chart = default_chart(spec.n);
    let dim = chart.dim();
    let n = spec.n;
    let mut frame = Vec::with_capacity(dim);
    match spec.realization {
        Realization::Flat => {
            for k in 0..dim {
                frame.push(VectorField::coordinate(chart.clone(), k));
            }
        }
        Realization::FrameAuto => {
            frame.push(VectorField::coordinate(chart.clone(), 0));
            let [fxx, fxy, fyx, fyy] = frame_block(spec.mu);
            for i in 1..=n {
                let mut comps = vec![Expr::zero(); dim];
                comps[chart.x_index(i)] = fxx.clone();
                comps[chart.y_index(i)] = fyx.clone();
                frame.push(VectorField::new(chart.clone(), comps)?);
            }
            for i in 1..=n {
                let mut comps = vec![Expr::zero(); dim];
                comps[chart.x_index(i)] = fxy.clone();
                comps[chart.y_index(i)] = fyy.clone();
                frame.push(VectorField::new(chart.clone(), comps)?);
            }
        }
        Realization::GlobalCr => {
            let half_mu = Expr::num(spec.mu / 2.0);
            let mut xi = vec![Expr::zero(); dim];
            xi[0] = Expr::one();
            for i in 1..=n {
                let x = Expr::var(chart.x_index(i));
                let y = Expr::var(chart.y_index(i));
                xi[chart.x_index(i)] = Expr::neg(x.clone()) - half_mu.clone() * y.clone();
                xi[chart.y_index(i)] = half_mu.clone() * x + y;
            }
            frame.push(VectorField::new(chart.clone(), xi)?);
            for i in 1..=n {
                frame.push(VectorField::coordinate(chart.clone(), chart.x_index(i)));
            }
            for i in 1..=n {
                frame.push(VectorField::coordinate(chart.clone(), chart.y_index(i)));
            }
        }
        Realization::ControlTwisted => {
            // lambda = x1 twists the y-block columns against each other
            let l = Expr::var(chart.x_index(1));
            frame.push(VectorField::coordinate(chart.clone(), 0));
            // X_1 = dx1, X_2 = dx2 - lambda dx1
            frame.push(VectorField::coordinate(chart.clone(), chart.x_index(1)));
            let mut x2 = vec![Expr::zero(); dim];
            x2[chart.x_index(2)] = Expr::one();
            x2[chart.x_index(1)] = Expr::neg(l.clone());
            frame.push(VectorField::new(chart.clone(), x2)?);
            // Y_1 = dy1 + lambda dy2, Y_2 = dy2
            let mut y1 = vec![Expr::zero(); dim];
            y1[chart.y_index(1)] = Expr::one();
            y1[chart.y_index(2)] = l;
            frame.push(VectorField::new(chart.clone(), y1)?);
            frame.push(VectorField::coordinate(chart.clone(), chart.y_index(2)));
        }
        Realization::ControlContact => {
            frame.push(VectorField::coordinate(chart.clone(), 0));
            let mut x1 = vec![Expr::zero(); dim];
            x1[chart.x_index(1)] = Expr::one();
            x1[0] = Expr::var(chart.y_index(1));
            frame.push(VectorField::new(chart.clone(), x1)?);
            frame.push(VectorField::coordinate(chart.clone(), chart.y_index(1)));
        }
    }
    Ok(frame)
}

/// Assembles the structure tensors from an orthonormal frame
/// `(xi, X_1..X_n, Y_1..Y_n)`: the frame matrix F is inverted
/// symbolically, eta is its first row, `g = F^{-T} F^{-1}`, and phi
/// conjugates the block rotation `X_i -> Y_i -> -X_i` by F.
pub fn structure_from_frame(
    chart: Arc<ChartDecl>,
    frame: &[VectorField],
) -> Result<ChartStructure> {
    let dim = chart.dim();
    let n = chart.n();
    let fm: Vec<Vec<Expr>> = (0..dim)
        .map(|k| (0..dim).map(|j| frame[j].comps[k].clone()).collect())
        .collect();
    let (finv, _det) = invert_symbolic(&fm)?;

    let eta = KForm::one(chart.clone(), finv[0].clone())?;

    let mut g = vec![vec![Expr::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..=i {
            let e = Expr::sum(
                (0..dim)
                    .map(|k| finv[k][i].clone() * finv[k][j].clone())
                    .collect(),
            );
            g[i][j] = e.clone();
            g[j][i] = e;
        }
    }
    let g = MetricField::new(chart.clone(), g)?;

    // phi in the frame: 0 on xi, X_i -> Y_i, Y_i -> -X_i
    let mut jf = vec![vec![Expr::zero(); dim]; dim];
    for i in 1..=n {
        jf[n + i][i] = Expr::one();
        jf[i][n + i] = Expr::num(-1.0);
    }
    let mut phi = vec![vec![Expr::zero(); dim]; dim];
    for k in 0..dim {
        for j in 0..dim {
            let mut terms = Vec::new();
            for a in 0..dim {
                for b in 0..dim {
                    if jf[a][b].is_zero() {
                        continue;
                    }
                    terms.push(fm[k][a].clone() * jf[a][b].clone() * finv[b][j].clone());
                }
            }
            phi[k][j] = Expr::sum(terms);
        }
    }
    let phi = Tensor11::new(chart.clone(), phi)?;
    let xi = frame[0].clone();
    Ok(ChartStructure::new(chart, phi, xi, eta, g))
}

/// Builds the structure of a model spec on the default chart.
pub fn build_model(spec: &ModelSpec) -> Result<ChartStructure> {
    let chart = default_chart(spec.n);
    let frame = frame_fields(spec)?;
    structure_from_frame(chart, &frame)
}

/// Residuals of the model Lie algebra relations on the frame:
/// `[xi, X_i] = X_i - (mu/2) Y_i`, `[xi, Y_i] = (mu/2) X_i - Y_i`, all
/// other commutators zero.  Applies to the frame and global CR
/// realizations.
pub fn check_commutators(
    spec: &ModelSpec,
    sample: &Sample,
    tolerance: f64,
) -> Result<VerificationReport> {
    if !matches!(
        spec.realization,
        Realization::FrameAuto | Realization::GlobalCr
    ) {
        return Err(Error::InvalidInput(
            "commutator relations apply to model-frame and model-global-cr".into(),
        ));
    }
    let frame = frame_fields(spec)?;
    let n = spec.n;
    let half_mu = Expr::num(spec.mu / 2.0);
    let mut defects: Vec<VectorField> = Vec::new();
    for i in 1..=n {
        let xi_x = lie_bracket(&frame[0], &frame[i])?;
        let want = frame[i].sub(&frame[n + i].scale(half_mu.clone()));
        defects.push(xi_x.sub(&want));
        let xi_y = lie_bracket(&frame[0], &frame[n + i])?;
        let want = frame[i].scale(half_mu.clone()).sub(&frame[n + i]);
        defects.push(xi_y.sub(&want));
    }
    for a in 1..(2 * n + 1) {
        for b in (a + 1)..(2 * n + 1) {
            defects.push(lie_bracket(&frame[a], &frame[b])?);
        }
    }
    let no_params = std::collections::HashMap::new();
    let mut res = Residuals::new("model-commutators", tolerance, sample.seed);
    for p in &sample.points {
        res.next_point();
        let mut ev = Evaluator::new(p, &no_params);
        for d in &defects {
            for c in &d.comps {
                res.record(ev.eval(c)?.norm());
            }
        }
    }
    Ok(res.finish())
}

/// Compares the hyperbolic and trigonometric frame component functions
/// at `mu = +-(2 -+ delta)` against the linear frame at `mu = +-2` on a
/// t-grid.  The reported max residual shrinks with delta, exhibiting the
/// linear frame as the two-sided limit.
pub fn check_limit_at_two(delta: f64, tolerance: f64) -> VerificationReport {
    let grid: Vec<f64> = (0..33).map(|k| -0.8 + 0.05 * k as f64).collect();
    let no_params = std::collections::HashMap::new();
    let mut res = Residuals::new("frame-limit-at-two", tolerance, 0);
    for sign in [1.0f64, -1.0] {
        let target = frame_block(2.0 * sign);
        for near in [frame_block(sign * (2.0 - delta)), frame_block(sign * (2.0 + delta))] {
            for &t in &grid {
                res.next_point();
                let p = [t, 0.0, 0.0];
                let mut ev = Evaluator::new(&p, &no_params);
                for (a, b) in near.iter().zip(&target) {
                    let d = (ev.eval(a).unwrap() - ev.eval(b).unwrap()).norm();
                    res.record(d);
                }
            }
        }
    }
    res.finish()
}

/// CR chart data of the global realization:
/// `a^i = -conj(z^i) + (i mu / 2) z^i` with the orthonormal-frame value
/// `g_{i jbar} = delta_{ij} / 2`.
pub fn model_cr_data(spec: &ModelSpec) -> Result<CRChartData> {
    if spec.realization != Realization::GlobalCr {
        return Err(Error::WrongRealization(
            "CR chart data is extracted from the global CR realization".into(),
        ));
    }
    let chart = default_chart(spec.n);
    let n = spec.n;
    let a = (1..=n)
        .map(|i| {
            let z = Expr::var(chart.x_index(i)) + Expr::i() * Expr::var(chart.y_index(i));
            Expr::neg(Expr::conj(z.clone())) + Expr::num(spec.mu / 2.0) * Expr::i() * z
        })
        .collect();
    let gh = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Expr::num(0.5) } else { Expr::zero() })
                .collect()
        })
        .collect();
    CRChartData::new(chart, a, gh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::accs::{
        check_acm_axioms, check_almost_cosymplectic, check_kahler_leaves, check_kmn,
        estimate_kmn, perrone_p,
    };
    use crate::cr::{build_from_cr_chart, check_cr_integrability};
    use crate::expr::Complex;
    use crate::numeric;
    use crate::report::IDENTITY_TOL;

    fn sample(n: usize, seed: u64, count: usize) -> Sample {
        Sample::draw(&default_chart(n), seed, count)
    }

    fn spec(name: &str, n: usize, mu: f64) -> ModelSpec {
        ModelSpec::from_name(name, n, mu).unwrap()
    }

    #[test]
    fn registry_rejects_unknown_and_bad_dims() {
        assert!(ModelSpec::from_name("nope", 1, 0.0).is_err());
        assert!(ModelSpec::from_name("control-twisted", 1, 0.0).is_err());
        assert!(ModelSpec::from_name("control-contact", 2, 0.0).is_err());
    }

    #[test]
    fn frame_mu_zero_is_exponential_warp() {
        let s = build_model(&spec("model-frame", 1, 0.0)).unwrap();
        let p = [0.3, 0.1, -0.2];
        let mut ev = Evaluator::new(&p, &s.params);
        let gm = numeric::eval_metric(&mut ev, &s.g).unwrap();
        let e2t = f64::exp(2.0 * p[0]);
        assert!((gm[0][0] - Complex::new(1.0, 0.0)).norm() < 1e-10);
        assert!((gm[1][1] - Complex::new(1.0 / e2t, 0.0)).norm() < 1e-10);
        assert!((gm[2][2] - Complex::new(e2t, 0.0)).norm() < 1e-10);
        assert!(gm[0][1].norm() < 1e-12 && gm[1][2].norm() < 1e-12);
    }

    #[test]
    fn frame_mu_two_is_linear() {
        let frame = frame_fields(&spec("model-frame", 1, 2.0)).unwrap();
        let t = 0.4;
        let x1 = numeric::eval_vf_at(&frame[1], &[t, 0.0, 0.0], &Default::default()).unwrap();
        let y1 = numeric::eval_vf_at(&frame[2], &[t, 0.0, 0.0], &Default::default()).unwrap();
        assert!((x1[1].re - (1.0 + t)).abs() < 1e-12);
        assert!((x1[2].re - (-t)).abs() < 1e-12);
        assert!((y1[1].re - t).abs() < 1e-12);
        assert!((y1[2].re - (1.0 - t)).abs() < 1e-12);
    }

    #[test]
    fn frame_mu_three_is_trigonometric() {
        let frame = frame_fields(&spec("model-frame", 1, 3.0)).unwrap();
        let w = (9.0f64 / 4.0 - 1.0).sqrt();
        let t = -0.5;
        let x1 = numeric::eval_vf_at(&frame[1], &[t, 0.0, 0.0], &Default::default()).unwrap();
        assert!((x1[1].re - ((w * t).cos() + (w * t).sin() / w)).abs() < 1e-12);
        assert!((x1[2].re - (-1.5 * (w * t).sin() / w)).abs() < 1e-12);
    }

    #[test]
    fn commutators_hold_for_both_realizations() {
        for mu in [0.0, 1.0, 2.0, -2.0, 3.0, -1.5] {
            for name in ["model-frame", "model-global-cr"] {
                let sp = spec(name, 1, mu);
                let rep = check_commutators(&sp, &sample(1, 5, 5), IDENTITY_TOL).unwrap();
                assert!(rep.pass, "{name} mu={mu}: residual {}", rep.max_residual);
            }
        }
        let sp = spec("model-global-cr", 2, 1.0);
        assert!(check_commutators(&sp, &sample(2, 5, 3), IDENTITY_TOL).unwrap().pass);
        assert!(check_commutators(&spec("flat", 1, 0.0), &sample(1, 5, 3), 1e-8).is_err());
    }

    #[test]
    fn models_satisfy_axioms_and_are_almost_cosymplectic() {
        for sp in [
            spec("flat", 1, 0.0),
            spec("model-frame", 1, 1.0),
            spec("model-frame", 1, 2.0),
            spec("model-frame", 1, 3.0),
            spec("model-global-cr", 1, 1.0),
        ] {
            let s = build_model(&sp).unwrap();
            let sm = sample(1, 3, 5);
            let rep = check_acm_axioms(&s, &sm, IDENTITY_TOL).unwrap();
            assert!(rep.pass, "{sp:?} axioms: {}", rep.max_residual);
            let rep = check_almost_cosymplectic(&s, &sm, IDENTITY_TOL).unwrap();
            assert!(rep.pass, "{sp:?} d-closedness: {}", rep.max_residual);
        }
    }

    #[test]
    fn models_are_nullity_spaces_with_kappa_minus_one() {
        for mu in [1.0, 2.0, 3.0] {
            let s = build_model(&spec("model-frame", 1, mu)).unwrap();
            let sm = sample(1, 9, 4);
            let rep = check_kmn(
                &s,
                &Expr::num(-1.0),
                &Expr::num(mu),
                &Expr::zero(),
                &sm,
                IDENTITY_TOL,
            )
            .unwrap();
            assert!(rep.pass, "mu={mu}: residual {}", rep.max_residual);
            let est = estimate_kmn(&s, &sm.points[0]).unwrap();
            assert!(!est.underdetermined);
            assert!((est.kappa.unwrap() + 1.0).abs() < 1e-7);
            assert!((est.mu.unwrap() - mu).abs() < 1e-7);
            assert!(est.nu.unwrap().abs() < 1e-7);
        }
    }

    #[test]
    fn global_cr_realization_is_a_nullity_space() {
        let s = build_model(&spec("model-global-cr", 1, 1.0)).unwrap();
        let sm = sample(1, 13, 4);
        let rep = check_kmn(
            &s,
            &Expr::num(-1.0),
            &Expr::num(1.0),
            &Expr::zero(),
            &sm,
            IDENTITY_TOL,
        )
        .unwrap();
        assert!(rep.pass, "residual {}", rep.max_residual);
    }

    #[test]
    fn cr_data_rebuild_matches_global_model() {
        let sp = spec("model-global-cr", 1, 1.0);
        let s = build_model(&sp).unwrap();
        let rebuilt = build_from_cr_chart(&model_cr_data(&sp).unwrap()).unwrap();
        let no_params = std::collections::HashMap::new();
        for p in &sample(1, 17, 6).points {
            let mut e1 = Evaluator::new(p, &no_params);
            let mut e2 = Evaluator::new(p, &no_params);
            for (a, b) in s.g.m.iter().flatten().zip(rebuilt.g.m.iter().flatten()) {
                assert!((e1.eval(a).unwrap() - e2.eval(b).unwrap()).norm() < 1e-10);
            }
            for (a, b) in s.phi.m.iter().flatten().zip(rebuilt.phi.m.iter().flatten()) {
                assert!((e1.eval(a).unwrap() - e2.eval(b).unwrap()).norm() < 1e-10);
            }
            for (a, b) in s.xi.comps.iter().zip(&rebuilt.xi.comps) {
                assert!((e1.eval(a).unwrap() - e2.eval(b).unwrap()).norm() < 1e-10);
            }
            for (a, b) in s.eta_comps().iter().zip(rebuilt.eta_comps()) {
                assert!((e1.eval(a).unwrap() - e2.eval(b).unwrap()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn twisted_control_fails_integrability_coherently() {
        let s = build_model(&spec("control-twisted", 2, 0.0)).unwrap();
        let sm = sample(2, 19, 4);
        assert!(check_acm_axioms(&s, &sm, IDENTITY_TOL).unwrap().pass);
        assert!(check_almost_cosymplectic(&s, &sm, IDENTITY_TOL).unwrap().pass);
        let cr = check_cr_integrability(&s, &sm, IDENTITY_TOL).unwrap();
        let kl = check_kahler_leaves(&s, &sm, IDENTITY_TOL).unwrap();
        assert!(!cr.pass, "twisted control should not be CR integrable");
        assert_eq!(cr.pass, kl.pass);
    }

    #[test]
    fn contact_control_is_not_almost_cosymplectic() {
        let s = build_model(&spec("control-contact", 1, 0.0)).unwrap();
        let sm = sample(1, 23, 5);
        assert!(check_acm_axioms(&s, &sm, IDENTITY_TOL).unwrap().pass);
        assert!(!check_almost_cosymplectic(&s, &sm, IDENTITY_TOL).unwrap().pass);
        // eta = dt - y dx
        let p = [0.1, 0.2, 0.5];
        let mut ev = Evaluator::new(&p, &s.params);
        assert!((ev.eval(&s.eta_comps()[1]).unwrap() - Complex::new(-0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn linear_frame_is_the_two_sided_limit() {
        let d2 = check_limit_at_two(1e-2, 1.0).max_residual;
        let d4 = check_limit_at_two(1e-4, 1.0).max_residual;
        let d6 = check_limit_at_two(1e-6, 1e-4).max_residual;
        assert!(d2 > d4 && d4 > d6);
        assert!(d6 <= 1e-4, "deviation at delta=1e-6 was {d6}");
    }

    #[test]
    fn perrone_sign_trichotomy() {
        let p = |mu: f64| {
            let s = build_model(&spec("model-frame", 1, mu)).unwrap();
            perrone_p(&s, &[0.2, -0.1, 0.3]).unwrap()
        };
        let closed = |mu: f64| (2.0 * mu * mu + 8.0).sqrt() - 4.0;
        for mu in [0.0, 1.0, 2.0, 3.0, -2.5] {
            assert!((p(mu) - closed(mu)).abs() < 1e-8, "mu={mu}");
        }
        assert!(p(1.0) < 0.0);
        assert!(p(2.0).abs() < 1e-9);
        assert!(p(3.0) > 0.0);
    }

    #[test]
    fn paper_style_r_display_differs_by_factor_two() {
        // With the orthonormal-frame convention g_{i ibar} = 1/2, the
        // built r is 1 + sum |a|^2; the alternative reading with
        // g_{i ibar} = 1 would give 1 + 2 sum |a|^2 (value 3 at mu = 0,
        // z = 1, where ours gives 2).
        let data = model_cr_data(&spec("model-global-cr", 1, 0.0)).unwrap();
        let r = data.r();
        let v = r.eval(&[0.0, 1.0, 0.0], &Default::default()).unwrap();
        assert!((v - Complex::new(2.0, 0.0)).norm() < 1e-12);
    }
}
