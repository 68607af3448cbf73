//! Finite-difference oracles shared by the integration tests.  These
//! recompute connection and curvature components from metric samples
//! alone, independently of the symbolic differentiation pipeline.

use cosym::accs::ChartStructure;

pub fn metric_at(s: &ChartStructure, p: &[f64]) -> Vec<Vec<f64>> {
    let v = s.eval_at(p).expect("metric evaluates");
    v.g.iter()
        .map(|row| row.iter().map(|c| c.re).collect())
        .collect()
}

/// Dense inverse by Gauss-Jordan with partial pivoting.
pub fn invert(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        let d = a[col][col];
        assert!(d.abs() > 1e-12, "singular metric in oracle");
        for j in 0..2 * n {
            a[col][j] /= d;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                for j in 0..2 * n {
                    a[r][j] -= f * a[col][j];
                }
            }
        }
    }
    a.iter().map(|row| row[n..].to_vec()).collect()
}

fn shifted(p: &[f64], k: usize, h: f64) -> Vec<f64> {
    let mut q = p.to_vec();
    q[k] += h;
    q
}

/// `Gamma^k_{ij}` from central differences of the metric.
pub fn christoffel_fd(s: &ChartStructure, p: &[f64], h: f64) -> Vec<Vec<Vec<f64>>> {
    let dim = p.len();
    let ginv = invert(&metric_at(s, p));
    // dg[l][i][j] = d_l g_ij
    let dg: Vec<Vec<Vec<f64>>> = (0..dim)
        .map(|l| {
            let gp = metric_at(s, &shifted(p, l, h));
            let gm = metric_at(s, &shifted(p, l, -h));
            (0..dim)
                .map(|i| (0..dim).map(|j| (gp[i][j] - gm[i][j]) / (2.0 * h)).collect())
                .collect()
        })
        .collect();
    let mut gamma = vec![vec![vec![0.0; dim]; dim]; dim];
    for k in 0..dim {
        for i in 0..dim {
            for j in 0..dim {
                let mut v = 0.0;
                for l in 0..dim {
                    v += ginv[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
                }
                gamma[k][i][j] = 0.5 * v;
            }
        }
    }
    gamma
}

/// `R^l_{ijk}` (so that `R(d_i, d_j) d_k = R^l_{ijk} d_l`) from nested
/// central differences: the outer derivative of `christoffel_fd`.
pub fn curvature_fd(s: &ChartStructure, p: &[f64], h: f64) -> Vec<Vec<Vec<Vec<f64>>>> {
    let dim = p.len();
    let gamma = christoffel_fd(s, p, h);
    let dgamma: Vec<Vec<Vec<Vec<f64>>>> = (0..dim)
        .map(|i| {
            let gp = christoffel_fd(s, &shifted(p, i, h), h);
            let gm = christoffel_fd(s, &shifted(p, i, -h), h);
            (0..dim)
                .map(|l| {
                    (0..dim)
                        .map(|j| {
                            (0..dim)
                                .map(|k| (gp[l][j][k] - gm[l][j][k]) / (2.0 * h))
                                .collect()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut riem = vec![vec![vec![vec![0.0; dim]; dim]; dim]; dim];
    for l in 0..dim {
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut v = dgamma[i][l][j][k] - dgamma[j][l][i][k];
                    for m in 0..dim {
                        v += gamma[l][i][m] * gamma[m][j][k] - gamma[l][j][m] * gamma[m][i][k];
                    }
                    riem[l][i][j][k] = v;
                }
            }
        }
    }
    riem
}
