//! The versioned JSON manifold-file format: a chart declaration plus one
//! structure source (builtin model, explicit component expressions, or
//! CR chart data), with optional nullity coefficient expressions and an
//! optional deformation to apply.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::accs::ChartStructure;
use crate::cr::{build_from_cr_chart, CRChartData};
use crate::error::{Error, Result};
use crate::expr::{Expr, Parser};
use crate::fields::{ChartDecl, KForm, MetricField, Tensor11, VectorField};
use crate::models::{build_model, ModelSpec};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ManifoldFile {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chart: Option<ChartSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<BTreeMap<String, f64>>,
    pub structure: StructureSource,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kmn: Option<KmnSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChartSpec {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub box_: Option<Vec<(f64, f64)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureSource {
    Model {
        name: String,
        n: usize,
        #[serde(default)]
        mu: f64,
    },
    Explicit {
        phi: Vec<Vec<String>>,
        xi: Vec<String>,
        eta: Vec<String>,
        g: Vec<Vec<String>>,
    },
    CrChart {
        a: Vec<String>,
        g: Vec<Vec<String>>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KmnSpec {
    pub kappa: String,
    pub mu: String,
    pub nu: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeformSpec {
    pub alpha: f64,
    pub beta: String,
}

/// A manifold file resolved into live objects.
pub struct LoadedManifold {
    pub structure: ChartStructure,
    pub kmn: Option<(Expr, Expr, Expr)>,
    pub deformation: Option<(f64, Expr)>,
}

fn parse_with(parser: &Parser, what: &str, src: &str) -> Result<Expr> {
    parser
        .parse(src)
        .map_err(|e| Error::InvalidInput(format!("in {what} expression {src:?}: {e}")))
}

impl ManifoldFile {
    pub fn from_json(src: &str) -> Result<ManifoldFile> {
        let file: ManifoldFile = serde_json::from_str(src)
            .map_err(|e| Error::InvalidInput(format!("manifold file: {e}")))?;
        if file.schema != SCHEMA_VERSION {
            return Err(Error::InvalidInput(format!(
                "unsupported schema version {} (expected {SCHEMA_VERSION})",
                file.schema
            )));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifold file serializes")
    }

    /// CR dimension implied by the file.
    fn n(&self) -> Result<usize> {
        if let Some(c) = &self.chart {
            return Ok(c.n);
        }
        match &self.structure {
            StructureSource::Model { n, .. } => Ok(*n),
            _ => Err(Error::InvalidInput(
                "explicit and cr_chart structures require a chart declaration".into(),
            )),
        }
    }

    fn chart_decl(&self) -> Result<Arc<ChartDecl>> {
        let n = self.n()?;
        let mut decl = ChartDecl::standard(n, (-0.8, 0.8));
        if let Some(c) = &self.chart {
            if let Some(b) = &c.box_ {
                if b.len() != decl.dim() || b.iter().any(|(lo, hi)| lo >= hi) {
                    return Err(Error::InvalidInput(
                        "sampling box must list one nonempty interval per coordinate".into(),
                    ));
                }
                decl = decl.with_box(b.clone());
            }
        }
        Ok(Arc::new(decl))
    }

    pub fn load(&self) -> Result<LoadedManifold> {
        let chart = self.chart_decl()?;
        let param_names: Vec<String> = self
            .params
            .as_ref()
            .map(|m| m.keys().cloned().collect())
            .unwrap_or_default();
        let parser = Parser::new(&chart).with_param_names(&param_names);

        let structure = match &self.structure {
            StructureSource::Model { name, n, mu } => {
                if *n != chart.n() {
                    return Err(Error::InvalidInput(
                        "model n disagrees with chart declaration".into(),
                    ));
                }
                build_model(&ModelSpec::from_name(name, *n, *mu)?)?
            }
            StructureSource::Explicit { phi, xi, eta, g } => {
                let dim = chart.dim();
                let parse_matrix = |what: &str, m: &Vec<Vec<String>>| -> Result<Vec<Vec<Expr>>> {
                    if m.len() != dim || m.iter().any(|r| r.len() != dim) {
                        return Err(Error::BadDimension { got: m.len(), dim });
                    }
                    m.iter()
                        .map(|row| row.iter().map(|s| parse_with(&parser, what, s)).collect())
                        .collect()
                };
                let parse_vec = |what: &str, v: &Vec<String>| -> Result<Vec<Expr>> {
                    if v.len() != dim {
                        return Err(Error::BadDimension { got: v.len(), dim });
                    }
                    v.iter().map(|s| parse_with(&parser, what, s)).collect()
                };
                ChartStructure::new(
                    chart.clone(),
                    Tensor11::new(chart.clone(), parse_matrix("phi", phi)?)?,
                    VectorField::new(chart.clone(), parse_vec("xi", xi)?)?,
                    KForm::one(chart.clone(), parse_vec("eta", eta)?)?,
                    MetricField::new(chart.clone(), parse_matrix("g", g)?)?,
                )
            }
            StructureSource::CrChart { a, g } => {
                let n = chart.n();
                if a.len() != n || g.len() != n || g.iter().any(|r| r.len() != n) {
                    return Err(Error::BadDimension { got: a.len(), dim: n });
                }
                let a = a
                    .iter()
                    .map(|s| parse_with(&parser, "a", s))
                    .collect::<Result<Vec<_>>>()?;
                let gh = g
                    .iter()
                    .map(|row| row.iter().map(|s| parse_with(&parser, "g", s)).collect())
                    .collect::<Result<Vec<_>>>()?;
                build_from_cr_chart(&CRChartData::new(chart.clone(), a, gh)?)?
            }
        };
        let structure = match &self.params {
            Some(p) => structure.with_params(p.iter().map(|(k, v)| (k.clone(), *v)).collect()),
            None => structure,
        };

        let kmn = match &self.kmn {
            Some(k) => Some((
                parse_with(&parser, "kappa", &k.kappa)?,
                parse_with(&parser, "mu", &k.mu)?,
                parse_with(&parser, "nu", &k.nu)?,
            )),
            None => None,
        };
        let deformation = match &self.deformation {
            Some(d) => Some((d.alpha, parse_with(&parser, "beta", &d.beta)?)),
            None => None,
        };
        Ok(LoadedManifold {
            structure,
            kmn,
            deformation,
        })
    }

    /// File equivalent of CLI model selector flags.
    pub fn from_model(name: &str, n: usize, mu: f64) -> ManifoldFile {
        ManifoldFile {
            schema: SCHEMA_VERSION,
            chart: None,
            params: None,
            structure: StructureSource::Model {
                name: name.to_string(),
                n,
                mu,
            },
            kmn: None,
            deformation: None,
        }
    }
}

/// Serializes a structure to an explicit manifold file by rendering
/// every component expression; the output reparses to the same values.
pub fn render_structure(s: &ChartStructure) -> ManifoldFile {
    let names = s.chart.names().to_vec();
    let render_matrix = |m: &Vec<Vec<Expr>>| -> Vec<Vec<String>> {
        m.iter()
            .map(|row| row.iter().map(|e| e.render(&names)).collect())
            .collect()
    };
    ManifoldFile {
        schema: SCHEMA_VERSION,
        chart: Some(ChartSpec {
            n: s.chart.n(),
            box_: Some(s.chart.bbox().to_vec()),
        }),
        params: if s.params.is_empty() {
            None
        } else {
            Some(s.params.iter().map(|(k, v)| (k.clone(), *v)).collect())
        },
        structure: StructureSource::Explicit {
            phi: render_matrix(&s.phi.m),
            xi: s.xi.comps.iter().map(|e| e.render(&names)).collect(),
            eta: s.eta_comps().iter().map(|e| e.render(&names)).collect(),
            g: render_matrix(&s.g.m),
        },
        kmn: None,
        deformation: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Evaluator;
    use crate::fields::Sample;
    use crate::numeric;
    use crate::report::IDENTITY_TOL;

    #[test]
    fn model_file_loads() {
        let src = r#"{
            "schema": 1,
            "structure": { "model": { "name": "model-frame", "n": 1, "mu": 1.0 } },
            "kmn": { "kappa": "-1", "mu": "1", "nu": "0" }
        }"#;
        let file = ManifoldFile::from_json(src).unwrap();
        let loaded = file.load().unwrap();
        assert_eq!(loaded.structure.chart.n(), 1);
        assert!(loaded.kmn.is_some());
    }

    #[test]
    fn schema_version_checked() {
        let src = r#"{ "schema": 7, "structure": { "model": { "name": "flat", "n": 1 } } }"#;
        assert!(matches!(
            ManifoldFile::from_json(src),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn explicit_round_trip_preserves_values() {
        let s = build_model(&ModelSpec::from_name("model-frame", 1, 1.0).unwrap()).unwrap();
        let rendered = render_structure(&s);
        let json = rendered.to_json();
        let back = ManifoldFile::from_json(&json).unwrap().load().unwrap();
        let sm = Sample::draw(&s.chart, 31, 5);
        for p in &sm.points {
            let mut e1 = Evaluator::new(p, &s.params);
            let mut e2 = Evaluator::new(p, &back.structure.params);
            let a = numeric::eval_metric(&mut e1, &s.g).unwrap();
            let b = numeric::eval_metric(&mut e2, &back.structure.g).unwrap();
            for (ra, rb) in a.iter().zip(&b) {
                for (x, y) in ra.iter().zip(rb) {
                    assert!((x - y).norm() < 1e-12);
                }
            }
            let a = numeric::eval_tensor(&mut e1, &s.phi).unwrap();
            let b = numeric::eval_tensor(&mut e2, &back.structure.phi).unwrap();
            for (ra, rb) in a.iter().zip(&b) {
                for (x, y) in ra.iter().zip(rb) {
                    assert!((x - y).norm() < 1e-12);
                }
            }
        }
        // rendering the reparsed structure is stable
        let again = render_structure(&back.structure).to_json();
        let third = ManifoldFile::from_json(&again).unwrap().load().unwrap();
        assert_eq!(again, render_structure(&third.structure).to_json());
    }

    #[test]
    fn cr_chart_file_loads_and_passes_axioms() {
        let src = r#"{
            "schema": 1,
            "chart": { "n": 1 },
            "structure": { "cr_chart": { "a": ["-x1 + i*y1"], "g": [["0.5"]] } }
        }"#;
        let loaded = ManifoldFile::from_json(src).unwrap().load().unwrap();
        let sm = Sample::draw(&loaded.structure.chart, 7, 5);
        let rep = crate::accs::check_acm_axioms(&loaded.structure, &sm, IDENTITY_TOL).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn bad_expression_reports_position() {
        let src = r#"{
            "schema": 1,
            "chart": { "n": 1 },
            "structure": { "cr_chart": { "a": ["x1 + * y1"], "g": [["0.5"]] } }
        }"#;
        let err = match ManifoldFile::from_json(src).unwrap().load() {
            Err(e) => e,
            Ok(_) => panic!("expected parse failure"),
        };
        let msg = err.to_string();
        assert!(msg.contains("a expression"), "{msg}");
    }
}
