//! Symbolic expression trees over the real coordinates of a chart.
//!
//! An [`Expr`] is an immutable DAG (shared subtrees via `Arc`) built from
//! real constants, the imaginary unit, coordinate variables, named
//! parameters and a small set of analytic functions.  Expressions are
//! differentiated exactly and evaluated pointwise to complex numbers;
//! there is no general simplification beyond constant folding and
//! flattening of nested sums/products.

mod parser;

pub use parser::{parse_expression, ParseError, Parser};

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

pub type Complex = num_complex::Complex64;

/// Coordinates of an evaluation point, in chart order.
pub type Point = Vec<f64>;

#[derive(Debug, Error, PartialEq)]
pub enum EvalError {
    #[error("division by zero during evaluation")]
    DivisionByZero,
    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),
    #[error("coordinate index {index} out of range for point of dimension {dim}")]
    BadPoint { index: usize, dim: usize },
}

#[derive(Debug)]
enum Node {
    Const(f64),
    I,
    Var(usize),
    Param(String),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
    Quot(Expr, Expr),
    Pow(Expr, i32),
    Neg(Expr),
    Sin(Expr),
    Cos(Expr),
    Sinh(Expr),
    Cosh(Expr),
    Exp(Expr),
    Conj(Expr),
}

/// Immutable symbolic expression.  Cloning is cheap (`Arc` bump).
#[derive(Clone, Debug)]
pub struct Expr(Arc<Node>);

impl Expr {
    pub fn num(v: f64) -> Expr {
        Expr(Arc::new(Node::Const(v)))
    }

    pub fn zero() -> Expr {
        Expr::num(0.0)
    }

    pub fn one() -> Expr {
        Expr::num(1.0)
    }

    pub fn i() -> Expr {
        Expr(Arc::new(Node::I))
    }

    /// Coordinate variable by chart index.
    pub fn var(index: usize) -> Expr {
        Expr(Arc::new(Node::Var(index)))
    }

    pub fn param(name: &str) -> Expr {
        Expr(Arc::new(Node::Param(name.to_string())))
    }

    pub fn is_const(&self) -> Option<f64> {
        match &*self.0 {
            Node::Const(v) => Some(*v),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.is_const() == Some(0.0)
    }

    fn is_one(&self) -> bool {
        self.is_const() == Some(1.0)
    }

    /// n-ary sum with flattening and constant folding.
    pub fn sum(terms: Vec<Expr>) -> Expr {
        let mut flat = Vec::new();
        let mut c = 0.0;
        for t in terms {
            match &*t.0 {
                Node::Const(v) => c += v,
                Node::Sum(inner) => {
                    for s in inner {
                        match s.is_const() {
                            Some(v) => c += v,
                            None => flat.push(s.clone()),
                        }
                    }
                }
                _ => flat.push(t),
            }
        }
        if c != 0.0 || flat.is_empty() {
            flat.push(Expr::num(c));
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Expr(Arc::new(Node::Sum(flat)))
        }
    }

    /// n-ary product with flattening, zero absorption and constant folding.
    pub fn product(factors: Vec<Expr>) -> Expr {
        let mut flat = Vec::new();
        let mut c = 1.0;
        for f in factors {
            match &*f.0 {
                Node::Const(v) => c *= v,
                Node::Prod(inner) => {
                    for s in inner {
                        match s.is_const() {
                            Some(v) => c *= v,
                            None => flat.push(s.clone()),
                        }
                    }
                }
                _ => flat.push(f),
            }
        }
        if c == 0.0 {
            return Expr::zero();
        }
        if c != 1.0 || flat.is_empty() {
            flat.insert(0, Expr::num(c));
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Expr(Arc::new(Node::Prod(flat)))
        }
    }

    pub fn quot(num: Expr, den: Expr) -> Expr {
        if den.is_one() || num.is_zero() {
            return num;
        }
        if let (Some(a), Some(b)) = (num.is_const(), den.is_const()) {
            if b != 0.0 {
                return Expr::num(a / b);
            }
        }
        Expr(Arc::new(Node::Quot(num, den)))
    }

    /// Integer power.
    pub fn int_pow(base: Expr, exp: i32) -> Expr {
        match exp {
            0 => Expr::one(),
            1 => base,
            _ => {
                if let Some(v) = base.is_const() {
                    return Expr::num(v.powi(exp));
                }
                Expr(Arc::new(Node::Pow(base, exp)))
            }
        }
    }

    pub fn neg(e: Expr) -> Expr {
        match &*e.0 {
            Node::Const(v) => Expr::num(-v),
            Node::Neg(inner) => inner.clone(),
            _ => Expr(Arc::new(Node::Neg(e))),
        }
    }

    pub fn sin(e: Expr) -> Expr {
        match e.is_const() {
            Some(v) => Expr::num(v.sin()),
            None => Expr(Arc::new(Node::Sin(e))),
        }
    }

    pub fn cos(e: Expr) -> Expr {
        match e.is_const() {
            Some(v) => Expr::num(v.cos()),
            None => Expr(Arc::new(Node::Cos(e))),
        }
    }

    pub fn sinh(e: Expr) -> Expr {
        match e.is_const() {
            Some(v) => Expr::num(v.sinh()),
            None => Expr(Arc::new(Node::Sinh(e))),
        }
    }

    pub fn cosh(e: Expr) -> Expr {
        match e.is_const() {
            Some(v) => Expr::num(v.cosh()),
            None => Expr(Arc::new(Node::Cosh(e))),
        }
    }

    pub fn exp(e: Expr) -> Expr {
        match e.is_const() {
            Some(v) => Expr::num(v.exp()),
            None => Expr(Arc::new(Node::Exp(e))),
        }
    }

    /// Complex conjugate.  Real leaves (constants, coordinates, parameters)
    /// are their own conjugates; `conj(conj e)` collapses to `e`.
    pub fn conj(e: Expr) -> Expr {
        match &*e.0 {
            Node::Const(_) | Node::Var(_) | Node::Param(_) => e,
            Node::I => Expr::neg(Expr::i()),
            Node::Conj(inner) => inner.clone(),
            Node::Neg(inner) => Expr::neg(Expr::conj(inner.clone())),
            _ => Expr(Arc::new(Node::Conj(e))),
        }
    }

    /// Real part, expressed through conjugation: (e + conj e)/2.
    pub fn re(e: Expr) -> Expr {
        Expr::product(vec![
            Expr::num(0.5),
            Expr::sum(vec![e.clone(), Expr::conj(e)]),
        ])
    }

    /// Imaginary part: i (conj e - e)/2.
    pub fn im(e: Expr) -> Expr {
        Expr::product(vec![
            Expr::num(0.5),
            Expr::i(),
            Expr::sum(vec![Expr::conj(e.clone()), Expr::neg(e)]),
        ])
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Exact symbolic partial derivative with respect to a chart coordinate.
    pub fn differentiate(&self, coordinate: usize) -> Expr {
        let mut d = Differentiator::new(coordinate);
        d.diff(self)
    }

    /// Evaluate at a point with all parameters bound.
    pub fn eval(&self, point: &[f64], params: &HashMap<String, f64>) -> Result<Complex, EvalError> {
        Evaluator::new(point, params).eval(self)
    }

    /// Render as text that reparses to an evaluation-equivalent tree.
    pub fn render(&self, coord_names: &[String]) -> String {
        let mut s = String::new();
        self.render_into(&mut s, coord_names);
        s
    }

    fn render_into(&self, out: &mut String, names: &[String]) {
        match &*self.0 {
            Node::Const(v) => {
                if *v < 0.0 {
                    let _ = write!(out, "({v})");
                } else {
                    let _ = write!(out, "{v}");
                }
            }
            Node::I => out.push('i'),
            Node::Var(k) => out.push_str(&names[*k]),
            Node::Param(p) => out.push_str(p),
            Node::Sum(ts) => {
                out.push('(');
                for (k, t) in ts.iter().enumerate() {
                    if k > 0 {
                        out.push_str(" + ");
                    }
                    t.render_into(out, names);
                }
                out.push(')');
            }
            Node::Prod(fs) => {
                out.push('(');
                for (k, f) in fs.iter().enumerate() {
                    if k > 0 {
                        out.push('*');
                    }
                    f.render_into(out, names);
                }
                out.push(')');
            }
            Node::Quot(a, b) => {
                out.push('(');
                a.render_into(out, names);
                out.push('/');
                b.render_into(out, names);
                out.push(')');
            }
            Node::Pow(e, k) => {
                out.push('(');
                e.render_into(out, names);
                let _ = write!(out, "^{k}");
                out.push(')');
            }
            Node::Neg(e) => {
                out.push_str("(-");
                e.render_into(out, names);
                out.push(')');
            }
            Node::Sin(e) => Self::render_fn(out, "sin", e, names),
            Node::Cos(e) => Self::render_fn(out, "cos", e, names),
            Node::Sinh(e) => Self::render_fn(out, "sinh", e, names),
            Node::Cosh(e) => Self::render_fn(out, "cosh", e, names),
            Node::Exp(e) => Self::render_fn(out, "exp", e, names),
            Node::Conj(e) => Self::render_fn(out, "conj", e, names),
        }
    }

    fn render_fn(out: &mut String, name: &str, e: &Expr, names: &[String]) {
        out.push_str(name);
        out.push('(');
        e.render_into(out, names);
        out.push(')');
    }

    /// Node count of the underlying DAG counting shared nodes once.
    pub fn dag_size(&self) -> usize {
        fn walk(e: &Expr, seen: &mut std::collections::HashSet<usize>) {
            if !seen.insert(e.key()) {
                return;
            }
            match &*e.0 {
                Node::Const(_) | Node::I | Node::Var(_) | Node::Param(_) => {}
                Node::Sum(ts) | Node::Prod(ts) => ts.iter().for_each(|t| walk(t, seen)),
                Node::Quot(a, b) => {
                    walk(a, seen);
                    walk(b, seen);
                }
                Node::Pow(a, _)
                | Node::Neg(a)
                | Node::Sin(a)
                | Node::Cos(a)
                | Node::Sinh(a)
                | Node::Cosh(a)
                | Node::Exp(a)
                | Node::Conj(a) => walk(a, seen),
            }
        }
        let mut seen = std::collections::HashSet::new();
        walk(self, &mut seen);
        seen.len()
    }

    /// Tree depth (sharing ignored).
    pub fn depth(&self) -> usize {
        match &*self.0 {
            Node::Const(_) | Node::I | Node::Var(_) | Node::Param(_) => 1,
            Node::Sum(ts) | Node::Prod(ts) => {
                1 + ts.iter().map(Expr::depth).max().unwrap_or(0)
            }
            Node::Quot(a, b) => 1 + a.depth().max(b.depth()),
            Node::Pow(a, _)
            | Node::Neg(a)
            | Node::Sin(a)
            | Node::Cos(a)
            | Node::Sinh(a)
            | Node::Cosh(a)
            | Node::Exp(a)
            | Node::Conj(a) => 1 + a.depth(),
        }
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::sum(vec![self, rhs])
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::sum(vec![self, Expr::neg(rhs)])
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::product(vec![self, rhs])
    }
}

impl Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::quot(self, rhs)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::neg(self)
    }
}

/// Memoizing differentiation pass.  Shared input subtrees produce shared
/// derivative subtrees, which keeps curvature expressions from exploding.
pub struct Differentiator {
    coordinate: usize,
    // keeps the input expression alive alongside its derivative, so the
    // pointer key cannot be reused by a later allocation
    cache: HashMap<usize, (Expr, Expr)>,
}

impl Differentiator {
    pub fn new(coordinate: usize) -> Self {
        Differentiator {
            coordinate,
            cache: HashMap::new(),
        }
    }

    pub fn diff(&mut self, e: &Expr) -> Expr {
        if let Some((_, d)) = self.cache.get(&e.key()) {
            return d.clone();
        }
        let d = match &*e.0 {
            Node::Const(_) | Node::I | Node::Param(_) => Expr::zero(),
            Node::Var(k) => {
                if *k == self.coordinate {
                    Expr::one()
                } else {
                    Expr::zero()
                }
            }
            Node::Sum(ts) => Expr::sum(ts.iter().map(|t| self.diff(t)).collect()),
            Node::Prod(fs) => {
                let mut terms = Vec::with_capacity(fs.len());
                for (k, f) in fs.iter().enumerate() {
                    let df = self.diff(f);
                    if df.is_zero() {
                        continue;
                    }
                    let mut factors: Vec<Expr> = fs.to_vec();
                    factors[k] = df;
                    terms.push(Expr::product(factors));
                }
                Expr::sum(terms)
            }
            Node::Quot(a, b) => {
                let da = self.diff(a);
                let db = self.diff(b);
                // (da b - a db)/b^2
                Expr::quot(
                    da * b.clone() - a.clone() * db,
                    Expr::int_pow(b.clone(), 2),
                )
            }
            Node::Pow(base, k) => {
                let db = self.diff(base);
                Expr::num(*k as f64) * Expr::int_pow(base.clone(), k - 1) * db
            }
            Node::Neg(a) => Expr::neg(self.diff(a)),
            Node::Sin(a) => Expr::cos(a.clone()) * self.diff(a),
            Node::Cos(a) => Expr::neg(Expr::sin(a.clone())) * self.diff(a),
            Node::Sinh(a) => Expr::cosh(a.clone()) * self.diff(a),
            Node::Cosh(a) => Expr::sinh(a.clone()) * self.diff(a),
            Node::Exp(a) => Expr::exp(a.clone()) * self.diff(a),
            // chart coordinates are real, so d and conj commute
            Node::Conj(a) => Expr::conj(self.diff(a)),
        };
        self.cache.insert(e.key(), (e.clone(), d.clone()));
        d
    }
}

/// Pointwise evaluator with per-node memoization (valid for one point and
/// one parameter binding).
pub struct Evaluator<'a> {
    point: &'a [f64],
    params: &'a HashMap<String, f64>,
    // the Expr clone pins the node so its address cannot be recycled
    // into a stale cache hit while this evaluator is alive
    cache: HashMap<usize, (Expr, Complex)>,
}

impl<'a> Evaluator<'a> {
    pub fn new(point: &'a [f64], params: &'a HashMap<String, f64>) -> Self {
        Evaluator {
            point,
            params,
            cache: HashMap::new(),
        }
    }

    pub fn eval(&mut self, e: &Expr) -> Result<Complex, EvalError> {
        if let Some((_, v)) = self.cache.get(&e.key()) {
            return Ok(*v);
        }
        let v = match &*e.0 {
            Node::Const(c) => Complex::new(*c, 0.0),
            Node::I => Complex::new(0.0, 1.0),
            Node::Var(k) => {
                let x = self.point.get(*k).copied().ok_or(EvalError::BadPoint {
                    index: *k,
                    dim: self.point.len(),
                })?;
                Complex::new(x, 0.0)
            }
            Node::Param(p) => {
                let x = self
                    .params
                    .get(p)
                    .copied()
                    .ok_or_else(|| EvalError::UnboundParameter(p.clone()))?;
                Complex::new(x, 0.0)
            }
            Node::Sum(ts) => {
                let mut acc = Complex::new(0.0, 0.0);
                for t in ts {
                    acc += self.eval(t)?;
                }
                acc
            }
            Node::Prod(fs) => {
                let mut acc = Complex::new(1.0, 0.0);
                for f in fs {
                    acc *= self.eval(f)?;
                }
                acc
            }
            Node::Quot(a, b) => {
                let den = self.eval(b)?;
                if den.norm() == 0.0 {
                    return Err(EvalError::DivisionByZero);
                }
                self.eval(a)? / den
            }
            Node::Pow(a, k) => self.eval(a)?.powi(*k),
            Node::Neg(a) => -self.eval(a)?,
            Node::Sin(a) => self.eval(a)?.sin(),
            Node::Cos(a) => self.eval(a)?.cos(),
            Node::Sinh(a) => self.eval(a)?.sinh(),
            Node::Cosh(a) => self.eval(a)?.cosh(),
            Node::Exp(a) => self.eval(a)?.exp(),
            Node::Conj(a) => self.eval(a)?.conj(),
        };
        self.cache.insert(e.key(), (e.clone(), v));
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_params() -> HashMap<String, f64> {
        HashMap::new()
    }

    #[test]
    fn constant_folding() {
        let e = Expr::sum(vec![Expr::num(1.0), Expr::num(2.0), Expr::var(0)]);
        assert_eq!(e.eval(&[4.0], &no_params()).unwrap(), Complex::new(7.0, 0.0));
        assert!(Expr::product(vec![Expr::zero(), Expr::var(0)]).is_zero());
        assert!(Expr::int_pow(Expr::var(0), 0).is_one());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let e = Expr::i() * Expr::i();
        assert_eq!(e.eval(&[0.0], &no_params()).unwrap(), Complex::new(-1.0, 0.0));
    }

    #[test]
    fn cosh_at_zero_is_one() {
        // cosh(w*t) at t=0 for any w
        let mut params = HashMap::new();
        params.insert("w".to_string(), 123.456);
        let e = Expr::cosh(Expr::param("w") * Expr::var(0));
        assert_eq!(e.eval(&[0.0], &params).unwrap(), Complex::new(1.0, 0.0));
    }

    #[test]
    fn derivative_of_sinh() {
        // d/dt sinh(w t) = w cosh(w t)
        let mut params = HashMap::new();
        params.insert("w".to_string(), 0.7);
        let e = Expr::sinh(Expr::param("w") * Expr::var(0));
        let d = e.differentiate(0);
        let p = [0.4];
        let expect = 0.7 * f64::cosh(0.7 * 0.4);
        let got = d.eval(&p, &params).unwrap();
        assert!((got.re - expect).abs() < 1e-14, "{got}");
        assert_eq!(got.im, 0.0);
    }

    #[test]
    fn derivative_of_t_free_expression_is_zero() {
        let e = Expr::sin(Expr::var(1)) * Expr::var(2);
        assert!(e.differentiate(0).is_zero());
    }

    #[test]
    fn conj_involution() {
        let z = Expr::var(0) + Expr::i() * Expr::var(1);
        let cc = Expr::conj(Expr::conj(z.clone()));
        let p = [0.3, -1.2];
        assert_eq!(
            z.eval(&p, &no_params()).unwrap(),
            cc.eval(&p, &no_params()).unwrap()
        );
    }

    #[test]
    fn eval_conj_is_conjugate_of_eval() {
        let e = Expr::exp(Expr::i() * Expr::var(0)) + Expr::sin(Expr::var(1));
        let p = [0.9, 0.2];
        let v = e.eval(&p, &no_params()).unwrap();
        let vc = Expr::conj(e).eval(&p, &no_params()).unwrap();
        assert_eq!(v.conj(), vc);
    }

    #[test]
    fn division_by_zero_reported() {
        let e = Expr::quot(Expr::one(), Expr::var(0));
        assert_eq!(e.eval(&[0.0], &no_params()), Err(EvalError::DivisionByZero));
    }

    #[test]
    fn unbound_parameter_reported() {
        let e = Expr::param("mu");
        assert!(matches!(
            e.eval(&[0.0], &no_params()),
            Err(EvalError::UnboundParameter(p)) if p == "mu"
        ));
    }

    #[test]
    fn derivative_matches_finite_difference() {
        // d/dt [cosh(wt) + sinh(wt)/w] at t=0.3, w=0.5 (central difference, h=1e-5)
        let mut params = HashMap::new();
        params.insert("w".to_string(), 0.5);
        let wt = Expr::param("w") * Expr::var(0);
        let e = Expr::cosh(wt.clone()) + Expr::quot(Expr::sinh(wt), Expr::param("w"));
        let d = e.differentiate(0).eval(&[0.3], &params).unwrap();
        let h = 1e-5;
        let f = |t: f64| e.eval(&[t], &params).unwrap().re;
        let fd = (f(0.3 + h) - f(0.3 - h)) / (2.0 * h);
        assert!((d.re - fd).abs() < 1e-8, "symbolic {} vs fd {}", d.re, fd);
    }

    #[test]
    fn render_reparses_equivalently() {
        let names: Vec<String> = ["t", "x1", "y1"].iter().map(|s| s.to_string()).collect();
        let e = Expr::quot(
            Expr::sinh(Expr::param("w") * Expr::var(0)),
            Expr::param("w"),
        ) + Expr::conj(Expr::var(1) + Expr::i() * Expr::var(2))
            + Expr::int_pow(Expr::var(1), 3) * Expr::num(-2.5);
        let text = e.render(&names);
        let chart = crate::fields::ChartDecl::standard(1, (-1.0, 1.0));
        let back = Parser::new(&chart).with_params(&["w"]).parse(&text).unwrap();
        let mut params = HashMap::new();
        params.insert("w".to_string(), 0.8);
        for p in [[0.1, 0.2, 0.3], [-0.5, 0.7, -0.9]] {
            let a = e.eval(&p, &params).unwrap();
            let b = back.eval(&p, &params).unwrap();
            assert!((a - b).norm() < 1e-14);
        }
    }
}
