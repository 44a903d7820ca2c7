//! The 3×3 atomic density matrix and its physicality checks.

use core::ops::{Index, IndexMut};

use num_complex::Complex64;
#[allow(unused_imports)] // inherent float methods shadow these when std is linked
use num_traits::{Float, Zero};

/// Tolerances on the physical invariants of a density matrix.
pub const HERMITICITY_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-10;
pub const POPULATION_TOL: f64 = 1e-9;
pub const EIGENVALUE_TOL: f64 = 1e-9;

/// Fixed ordering of the nine components when a density matrix is flattened
/// into a vector: (ρ₁₁, ρ₂₂, ρ₃₃, ρ₂₁, ρ₁₂, ρ₃₁, ρ₁₃, ρ₃₂, ρ₂₃).
///
/// Entries are zero-based `(row, col)` pairs, so `(2, 0)` is ρ₃₁.
pub const VEC_ORDER: [(usize, usize); 9] = [
    (0, 0),
    (1, 1),
    (2, 2),
    (1, 0),
    (0, 1),
    (2, 0),
    (0, 2),
    (2, 1),
    (1, 2),
];

/// Position of ρ_ij (zero-based) in the flattened vector.
pub const fn vec_index(row: usize, col: usize) -> usize {
    match (row, col) {
        (0, 0) => 0,
        (1, 1) => 1,
        (2, 2) => 2,
        (1, 0) => 3,
        (0, 1) => 4,
        (2, 0) => 5,
        (0, 2) => 6,
        (2, 1) => 7,
        (1, 2) => 8,
        _ => panic!("density matrix index out of range"),
    }
}

/// Index of the conjugate partner ρ_ji in the flattened vector.
pub const fn conjugate_index(k: usize) -> usize {
    let (r, c) = VEC_ORDER[k];
    vec_index(c, r)
}

/// Atomic state. Indexing is zero-based: `rho[(2, 0)]` is ρ₃₁.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    elements: [[Complex64; 3]; 3],
}

impl Index<(usize, usize)> for DensityMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.elements[r][c]
    }
}

impl IndexMut<(usize, usize)> for DensityMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.elements[r][c]
    }
}

impl DensityMatrix {
    pub fn from_elements(elements: [[Complex64; 3]; 3]) -> Self {
        Self { elements }
    }

    pub fn elements(&self) -> &[[Complex64; 3]; 3] {
        &self.elements
    }

    /// Pure state |level⟩⟨level| for a zero-based level index.
    pub fn pure(level: usize) -> Self {
        let mut rho = Self::zero();
        rho[(level, level)] = Complex64::new(1.0, 0.0);
        rho
    }

    pub fn zero() -> Self {
        Self {
            elements: [[Complex64::zero(); 3]; 3],
        }
    }

    /// Fully mixed state 𝟙/3.
    pub fn maximally_mixed() -> Self {
        let mut rho = Self::zero();
        for i in 0..3 {
            rho[(i, i)] = Complex64::new(1.0 / 3.0, 0.0);
        }
        rho
    }

    pub fn from_vec(v: &[Complex64; 9]) -> Self {
        let mut rho = Self::zero();
        for (k, &(r, c)) in VEC_ORDER.iter().enumerate() {
            rho[(r, c)] = v[k];
        }
        rho
    }

    pub fn to_vec(&self) -> [Complex64; 9] {
        let mut v = [Complex64::zero(); 9];
        for (k, &(r, c)) in VEC_ORDER.iter().enumerate() {
            v[k] = self[(r, c)];
        }
        v
    }

    pub fn trace(&self) -> Complex64 {
        self[(0, 0)] + self[(1, 1)] + self[(2, 2)]
    }

    /// Real parts of (ρ₁₁, ρ₂₂, ρ₃₃).
    pub fn populations(&self) -> [f64; 3] {
        [self[(0, 0)].re, self[(1, 1)].re, self[(2, 2)].re]
    }

    /// Coherence ρ₃₁ on the probe transition.
    pub fn rho31(&self) -> Complex64 {
        self[(2, 0)]
    }

    /// Largest |ρ_ij − conj(ρ_ji)| over all pairs, diagonal included.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..3 {
            for c in 0..3 {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    /// Largest elementwise modulus of the difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..3 {
            for c in 0..3 {
                worst = worst.max((self[(r, c)] - other[(r, c)]).norm());
            }
        }
        worst
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn eigenvalues(&self) -> [f64; 3] {
        let mut a = self.elements;
        for r in 0..3 {
            a[r][r] = Complex64::new(a[r][r].re, 0.0);
            for c in (r + 1)..3 {
                let m = (a[r][c] + a[c][r].conj()) * 0.5;
                a[r][c] = m;
                a[c][r] = m.conj();
            }
        }
        hermitian_eigenvalues(&a)
    }

    pub fn validate(&self) -> Diagnostics {
        let trace = self.trace();
        let trace_defect = (trace - Complex64::new(1.0, 0.0)).norm();
        let hermiticity_defect = self.hermiticity_defect();
        let eig = self.eigenvalues();
        let min_eigenvalue = eig[0];
        let populations_in_range = (0..3).all(|i| {
            let p = self[(i, i)];
            p.im.abs() <= HERMITICITY_TOL && p.re >= -POPULATION_TOL && p.re <= 1.0 + POPULATION_TOL
        });
        let passed = hermiticity_defect <= HERMITICITY_TOL
            && trace_defect <= TRACE_TOL
            && populations_in_range
            && min_eigenvalue >= -EIGENVALUE_TOL;
        Diagnostics {
            hermiticity_defect,
            trace_defect,
            min_eigenvalue,
            populations_in_range,
            passed,
        }
    }
}

/// Outcome of [`DensityMatrix::validate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnostics {
    pub hermiticity_defect: f64,
    pub trace_defect: f64,
    pub min_eigenvalue: f64,
    pub populations_in_range: bool,
    pub passed: bool,
}

// Eigenvalues of a 3×3 Hermitian matrix. The matrix is embedded as the real
// symmetric 6×6 [[Re, −Im], [Im, Re]], whose spectrum is that of the original
// with every eigenvalue doubled, and diagonalized by cyclic Jacobi rotations.
fn hermitian_eigenvalues(a: &[[Complex64; 3]; 3]) -> [f64; 3] {
    const N: usize = 6;
    let mut m = [[0.0_f64; N]; N];
    for r in 0..3 {
        for c in 0..3 {
            m[r][c] = a[r][c].re;
            m[r + 3][c + 3] = a[r][c].re;
            m[r][c + 3] = -a[r][c].im;
            m[r + 3][c] = a[r][c].im;
        }
    }
    for _sweep in 0..50 {
        let off: f64 = (0..N)
            .flat_map(|r| (0..N).filter(move |&c| c != r).map(move |c| (r, c)))
            .map(|(r, c)| m[r][c] * m[r][c])
            .sum();
        let diag: f64 = (0..N).map(|i| m[i][i] * m[i][i]).sum();
        if off <= 1e-30 * diag.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                if m[p][q] == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..N {
                    let mkp = m[k][p];
                    let mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..N {
                    let mpk = m[p][k];
                    let mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut d: [f64; N] = core::array::from_fn(|i| m[i][i]);
    d.sort_by(f64::total_cmp);
    [d[0], d[2], d[4]]
}
