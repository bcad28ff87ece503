//! Small dense complex matrices and a one-sided Jacobi SVD.
//!
//! The matrices here come from matricizing statevectors across a
//! bipartition, so they are tiny by linear-algebra standards (at most a
//! few thousand on a side) and we only ever need singular values plus the
//! dominant singular pair. One-sided Jacobi keeps the columns explicit,
//! converges fast on such sizes, and is accurate to ~1e−13 in double
//! precision, which is plenty of margin under the rank thresholds.

use num_complex::Complex64;

/// Row-major dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = f(r, c);
            }
        }
        m
    }

    /// Build from nested row slices; rows must have equal lengths.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, z: Complex64) {
        self.data[r * self.cols + c] = z;
    }

    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
}

/// Thin singular value decomposition a = u · diag(s) · vᴴ with s
/// descending; u is rows×k and v is cols×k for k = min(rows, cols).
///
/// Columns of u belonging to zero singular values are left as zero
/// vectors rather than completed to an orthonormal basis.
pub struct Svd {
    pub u: CMatrix,
    pub singular_values: Vec<f64>,
    pub v: CMatrix,
}

const MAX_SWEEPS: usize = 64;

/// One-sided Jacobi SVD. Wide matrices are handled through the adjoint.
pub fn svd(a: &CMatrix) -> Svd {
    if a.rows < a.cols {
        let t = svd(&a.adjoint());
        return Svd {
            u: t.v,
            singular_values: t.singular_values,
            v: t.u,
        };
    }

    let m = a.rows;
    let n = a.cols;
    let mut w = a.clone();
    let mut v = CMatrix::from_fn(n, n, |r, c| {
        if r == c {
            Complex64::ONE
        } else {
            Complex64::ZERO
        }
    });

    // Rotate column pairs until every off-diagonal Gram entry is
    // negligible relative to the column norms.
    let eps = 1e-15;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = Complex64::ZERO;
                for r in 0..m {
                    let wp = w.get(r, p);
                    let wq = w.get(r, q);
                    alpha += wp.norm_sqr();
                    beta += wq.norm_sqr();
                    gamma += wp.conj() * wq;
                }
                let g = gamma.norm();
                if g <= eps * (alpha * beta).sqrt() || g == 0.0 {
                    continue;
                }
                rotated = true;

                // Absorb the phase of the Gram off-diagonal into column q,
                // then apply the real Jacobi rotation that annihilates it.
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;

                let rot = |mat: &mut CMatrix, len: usize| {
                    for r in 0..len {
                        let xp = mat.get(r, p);
                        let xq = mat.get(r, q);
                        mat.set(r, p, cs * xp - sn * phase.conj() * xq);
                        mat.set(r, q, sn * xp + cs * phase.conj() * xq);
                    }
                };
                rot(&mut w, m);
                rot(&mut v, n);
            }
        }
        if !rotated {
            break;
        }
    }

    // Column norms are the singular values; sort descending.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|c| w.column(c).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let mut u = CMatrix::zeros(m, n);
    let mut vs = CMatrix::zeros(n, n);
    let mut s = Vec::with_capacity(n);
    for (out_col, &c) in order.iter().enumerate() {
        let norm = norms[c];
        s.push(norm);
        if norm > 0.0 {
            for r in 0..m {
                u.set(r, out_col, w.get(r, c) / norm);
            }
        }
        for r in 0..n {
            vs.set(r, out_col, v.get(r, c));
        }
    }

    Svd {
        u,
        singular_values: s,
        v: vs,
    }
}
