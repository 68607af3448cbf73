//! Randomized structural properties of the symbolic layer: calculus
//! identities on generated expressions and coordinate-free invariances
//! of the higher-level operations.

use std::collections::HashMap;
use std::sync::Arc;

use proptest::prelude::*;

use cosym::accs::{d_conformal_deform, estimate_kmn_ordered};
use cosym::expr::{Differentiator, Expr};
use cosym::fields::{
    d_scalar, exterior_derivative, lie_bracket, ChartDecl, Sample, VectorField,
};
use cosym::models::{build_model, ModelSpec};

fn chart() -> Arc<ChartDecl> {
    Arc::new(ChartDecl::standard(1, (-0.8, 0.8)))
}

/// Random smooth expressions in the three chart coordinates, kept small
/// enough that finite differences stay well conditioned.
fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-2.0..2.0f64).prop_map(Expr::num),
        (0usize..3).prop_map(Expr::var),
    ];
    leaf.prop_recursive(3, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            inner.clone().prop_map(|a| Expr::sin(a)),
            inner.clone().prop_map(|a| Expr::exp(Expr::num(0.25) * a)),
            inner.prop_map(Expr::neg),
        ]
    })
}

fn point_strategy() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-0.7..0.7f64, 3)
}

fn vf_strategy() -> impl Strategy<Value = VectorField> {
    proptest::collection::vec(expr_strategy(), 3)
        .prop_map(|c| VectorField::new(chart(), c).unwrap())
}

fn eval(e: &Expr, p: &[f64]) -> f64 {
    e.eval(p, &HashMap::new()).unwrap().re
}

fn diff_fd(e: &Expr, p: &[f64], k: usize, h: f64) -> f64 {
    let mut up = p.to_vec();
    let mut dn = p.to_vec();
    up[k] += h;
    dn[k] -= h;
    (eval(e, &up) - eval(e, &dn)) / (2.0 * h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn differentiation_is_linear(a in expr_strategy(), b in expr_strategy(), p in point_strategy(),
                                 ca in -2.0..2.0f64, cb in -2.0..2.0f64) {
        let combo = Expr::num(ca) * a.clone() + Expr::num(cb) * b.clone();
        for k in 0..3 {
            let mut d = Differentiator::new(k);
            let lhs = eval(&d.diff(&combo), &p);
            let rhs = ca * eval(&d.diff(&a), &p) + cb * eval(&d.diff(&b), &p);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs().max(rhs.abs())));
        }
    }

    #[test]
    fn product_rule_matches_finite_differences(a in expr_strategy(), b in expr_strategy(),
                                               p in point_strategy()) {
        let prod = a * b;
        for k in 0..3 {
            let mut d = Differentiator::new(k);
            let sym = eval(&d.diff(&prod), &p);
            let fd = diff_fd(&prod, &p, k, 1e-5);
            let scale = 1.0 + sym.abs().max(fd.abs());
            prop_assert!((sym - fd).abs() / scale <= 1e-6,
                "sym {sym} vs fd {fd}");
        }
    }

    #[test]
    fn exterior_derivative_squares_to_zero(f in expr_strategy(), p in point_strategy()) {
        let c = chart();
        let df = d_scalar(&c, &f);
        let ddf = exterior_derivative(&df).unwrap();
        for comp in ddf.components() {
            prop_assert!(eval(comp, &p).abs() <= 1e-10);
        }
    }

    #[test]
    fn lie_bracket_satisfies_jacobi(x in vf_strategy(), y in vf_strategy(), z in vf_strategy(),
                                    p in point_strategy()) {
        let a = lie_bracket(&lie_bracket(&x, &y).unwrap(), &z).unwrap();
        let b = lie_bracket(&lie_bracket(&y, &z).unwrap(), &x).unwrap();
        let c = lie_bracket(&lie_bracket(&z, &x).unwrap(), &y).unwrap();
        let scale: f64 = 1.0
            + [&a, &b, &c]
                .iter()
                .flat_map(|v| v.comps.iter())
                .map(|e| eval(e, &p).abs())
                .fold(0.0, f64::max);
        for k in 0..3 {
            let s = eval(&a.comps[k], &p) + eval(&b.comps[k], &p) + eval(&c.comps[k], &p);
            prop_assert!(s.abs() / scale <= 1e-9, "jacobi residual {s}");
        }
    }

    #[test]
    fn parser_round_trips_rendered_expressions(e in expr_strategy(), p in point_strategy()) {
        let c = chart();
        let names = c.names().to_vec();
        let rendered = e.render(&names);
        let back = cosym::expr::parse_expression(&rendered, &c).unwrap();
        let (a, b) = (eval(&e, &p), eval(&back, &p));
        prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()), "{rendered}: {a} vs {b}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn kmn_fit_is_basis_order_invariant(mu in -3.0..3.0f64, seed in 0u64..1000) {
        let s = build_model(&ModelSpec::from_name("model-frame", 1, mu).unwrap()).unwrap();
        let sample = Sample::draw(&s.chart, seed, 3);
        for p in &sample.points {
            let a = estimate_kmn_ordered(&s, p, None).unwrap();
            let b = estimate_kmn_ordered(&s, p, Some(&[2, 0, 1])).unwrap();
            prop_assert_eq!(a.underdetermined, b.underdetermined);
            for (x, y) in [(a.kappa, b.kappa), (a.mu, b.mu), (a.nu, b.nu)] {
                match (x, y) {
                    (Some(x), Some(y)) => prop_assert!((x - y).abs() <= 1e-10),
                    (None, None) => {}
                    _ => prop_assert!(false, "fit shape differs across orders"),
                }
            }
        }
    }

    #[test]
    fn deformation_inverts(mu in -3.0..3.0f64, beta in 0.5..2.0f64, alpha in 0.5..2.0f64) {
        let s = build_model(&ModelSpec::from_name("model-frame", 1, mu).unwrap()).unwrap();
        let sample = Sample::draw(&s.chart, 11, 10);
        let fwd = d_conformal_deform(&s, alpha, &Expr::num(beta), &sample, 1e-8).unwrap();
        let back = d_conformal_deform(&fwd, 1.0 / alpha, &Expr::num(1.0 / beta), &sample, 1e-8)
            .unwrap();
        for p in &sample.points {
            let va = s.eval_at(p).unwrap();
            let vb = back.eval_at(p).unwrap();
            for i in 0..3 {
                prop_assert!((va.xi[i] - vb.xi[i]).norm() <= 1e-10);
                prop_assert!((va.eta[i] - vb.eta[i]).norm() <= 1e-10);
                for j in 0..3 {
                    prop_assert!((va.g[i][j] - vb.g[i][j]).norm() <= 1e-10);
                    prop_assert!((va.phi[i][j] - vb.phi[i][j]).norm() <= 1e-10);
                }
            }
        }
    }
}
