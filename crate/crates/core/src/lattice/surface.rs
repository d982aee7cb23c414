//! Surface descriptors: the lattice data of a blown-up surface.
//!
//! A minimal model enters only through (lattice, K_min, H_min); the blow-up
//! in k points appends k exceptional generators with Eᵢ² = −1, orthogonal to
//! the pulled-back minimal lattice, and K_X = σ*K_min + ΣEᵢ. For a closed
//! simply connected surface e(X) = 2 + b₂(X).

use super::{integer, CohClass, CohomologyLattice, LatticeError};
use num_rational::BigRational;

/// Lattice-level description of a (possibly blown-up) surface.
#[derive(Debug, Clone)]
pub struct SurfaceDescriptor {
    pub lattice: CohomologyLattice,
    pub euler: i64,
    pub signature: i64,
    /// K_X
    pub canonical: CohClass,
    /// E₁, …, E_k (possibly empty)
    pub exceptional: Vec<CohClass>,
    /// σ*K_min, when the blow-up structure is known
    pub pullback_minimal_canonical: Option<CohClass>,
}

impl SurfaceDescriptor {
    /// Validates the descriptor invariants: the form's signature matches
    /// σ(X), the canonical class is characteristic, the exceptional classes
    /// are orthonormal with square −1 and orthogonal to σ*K_min.
    pub fn new(
        lattice: CohomologyLattice,
        euler: i64,
        signature: i64,
        canonical: CohClass,
        exceptional: Vec<CohClass>,
        pullback_minimal_canonical: Option<CohClass>,
    ) -> Result<Self, LatticeError> {
        if lattice.signature() != signature {
            return Err(LatticeError::InvalidDescriptor {
                reason: format!(
                    "form signature {} does not match declared σ(X) = {}",
                    lattice.signature(),
                    signature
                ),
            });
        }
        if !lattice.is_characteristic(&canonical)? {
            return Err(LatticeError::InvalidDescriptor {
                reason: "canonical class is not characteristic".into(),
            });
        }
        for (i, ei) in exceptional.iter().enumerate() {
            for (j, ej) in exceptional.iter().enumerate() {
                let expect = if i == j { -1 } else { 0 };
                if lattice.pair_int(ei, ej)? != expect {
                    return Err(LatticeError::InvalidDescriptor {
                        reason: format!("E{}·E{} ≠ {}", i + 1, j + 1, expect),
                    });
                }
            }
            if let Some(kmin) = &pullback_minimal_canonical {
                if lattice.pair_int(ei, kmin)? != 0 {
                    return Err(LatticeError::InvalidDescriptor {
                        reason: format!("E{}·σ*K_min ≠ 0", i + 1),
                    });
                }
            }
        }
        Ok(SurfaceDescriptor {
            lattice,
            euler,
            signature,
            canonical,
            exceptional,
            pullback_minimal_canonical,
        })
    }

    pub fn exceptional_count(&self) -> usize {
        self.exceptional.len()
    }

    /// Extend a class of the minimal sublattice by zeros on the exceptional
    /// generators. Only meaningful for descriptors built by
    /// [`blowup_surface`], where the minimal basis comes first.
    pub fn extend_minimal(&self, minimal: &CohClass) -> Result<CohClass, LatticeError> {
        let k = self.exceptional.len();
        let min_rank = self.lattice.rank() - k;
        if minimal.0.len() != min_rank {
            return Err(LatticeError::DimensionMismatch {
                got: minimal.0.len(),
                rank: min_rank,
            });
        }
        let mut coords = minimal.0.clone();
        coords.extend(std::iter::repeat(0).take(k));
        Ok(CohClass(coords))
    }
}

/// Blow up a minimal model in k distinct points: lattice ⊕ diag(−1,…,−1),
/// e ↦ e + k, σ ↦ σ − k, K = σ*K_min + ΣEᵢ.
pub fn blowup_surface(
    minimal_form: &CohomologyLattice,
    k_min: &CohClass,
    k: usize,
) -> Result<SurfaceDescriptor, LatticeError> {
    let r0 = minimal_form.rank();
    if k_min.0.len() != r0 {
        return Err(LatticeError::DimensionMismatch {
            got: k_min.0.len(),
            rank: r0,
        });
    }
    let rank = r0 + k;
    let mut form = vec![vec![0i64; rank]; rank];
    for i in 0..r0 {
        for j in 0..r0 {
            form[i][j] = minimal_form.form()[i][j];
        }
    }
    for i in 0..k {
        form[r0 + i][r0 + i] = -1;
    }
    let mut labels: Vec<String> = minimal_form.labels().to_vec();
    for i in 0..k {
        labels.push(format!("E{}", i + 1));
    }
    let lattice = CohomologyLattice::new(form, Some(labels))?;

    let euler_min = 2 + r0 as i64;
    let sigma_min = minimal_form.signature();

    let mut pullback = k_min.0.clone();
    pullback.extend(std::iter::repeat(0).take(k));
    let pullback = CohClass(pullback);

    let exceptional: Vec<CohClass> = (0..k).map(|i| lattice.basis_class(r0 + i)).collect();
    let mut canonical = pullback.clone();
    for e in &exceptional {
        canonical = canonical.add(e);
    }

    SurfaceDescriptor::new(
        lattice,
        euler_min + k as i64,
        sigma_min - k as i64,
        canonical,
        exceptional,
        Some(pullback),
    )
}

/// c_I = 2·c₁(E_I) − c₁(K_X) = 2Σ_{i∈I} Eᵢ − K_X for I ⊂ {1,…,k}
/// (1-based indices). Always almost canonical when K_X is.
pub fn class_c_i(s: &SurfaceDescriptor, indices: &[usize]) -> Result<CohClass, LatticeError> {
    let k = s.exceptional.len();
    let mut e_i = CohClass::zero(s.lattice.rank());
    for &i in indices {
        if i == 0 || i > k {
            return Err(LatticeError::IndexOutOfRange { index: i, count: k });
        }
        e_i = e_i.add(&s.exceptional[i - 1]);
    }
    Ok(e_i.scale(2).sub(&s.canonical))
}

/// H_n = σ*(n·H_min) − E, E = ΣEᵢ, with H_min in the minimal sublattice and
/// n ≥ 1.
pub fn polarization_class(
    s: &SurfaceDescriptor,
    h_min: &CohClass,
    n: i64,
) -> Result<CohClass, LatticeError> {
    if n < 1 {
        return Err(LatticeError::PreconditionViolated {
            reason: format!("polarization requires n ≥ 1, got {n}"),
        });
    }
    let mut class = s.extend_minimal(&h_min.scale(n))?;
    for e in &s.exceptional {
        class = class.sub(e);
    }
    Ok(class)
}

/// Smallest n ≥ 1 with c_I·[ω_{g_n}] < 0. The pairing obeys the closed form
/// c_I·H_n = 2|I| − k − n·(K_min·H_min), so when d = K_min·H_min > 0 the
/// threshold is max(1, floor((2|I| − k)/d) + 1); for d ≤ 0 with
/// 2|I| − k ≥ 0 there is none.
pub fn threshold_n(
    s: &SurfaceDescriptor,
    h_min: &CohClass,
    indices: &[usize],
) -> Result<Option<i64>, LatticeError> {
    let k = s.exceptional.len() as i64;
    let kmin = s
        .pullback_minimal_canonical
        .as_ref()
        .ok_or_else(|| LatticeError::PreconditionViolated {
            reason: "descriptor has no pulled-back minimal canonical class".into(),
        })?;
    let h_ext = s.extend_minimal(h_min)?;
    let d = s.lattice.pair_int(kmin, &h_ext)?;
    let a = 2 * indices.len() as i64 - k;
    if d > 0 {
        // the pairing a − n·d is decreasing in n
        Ok(Some((a.div_euclid(d) + 1).max(1)))
    } else if a - d < 0 {
        // d ≤ 0 makes the pairing nondecreasing in n; negative only from n = 1
        Ok(Some(1))
    } else {
        Ok(None)
    }
}

/// ω-pairing of c_I against the polarization H_n, as an exact rational.
pub fn ci_dot_polarization(
    s: &SurfaceDescriptor,
    h_min: &CohClass,
    indices: &[usize],
    n: i64,
) -> Result<BigRational, LatticeError> {
    let ci = class_c_i(s, indices)?;
    let hn = polarization_class(s, h_min, n)?;
    Ok(integer(s.lattice.pair_int(&ci, &hn)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{is_almost_canonical, integer};

    fn cp2_minimal() -> (CohomologyLattice, CohClass) {
        (
            CohomologyLattice::new(vec![vec![1]], Some(vec!["H".into()])).unwrap(),
            CohClass(vec![-3]),
        )
    }

    #[test]
    fn blowup_cp2_two_points() {
        let (form, kmin) = cp2_minimal();
        let s = blowup_surface(&form, &kmin, 2).unwrap();
        assert_eq!(s.lattice.rank(), 3);
        assert_eq!(s.lattice.form()[0][0], 1);
        assert_eq!(s.lattice.form()[1][1], -1);
        assert_eq!(s.lattice.form()[2][2], -1);
        assert_eq!(s.canonical, CohClass(vec![-3, 1, 1]));
        assert_eq!(s.euler, 5);
        assert_eq!(s.signature, -1);
    }

    #[test]
    fn blowup_zero_points_is_identity() {
        let (form, kmin) = cp2_minimal();
        let s = blowup_surface(&form, &kmin, 0).unwrap();
        assert_eq!(s.lattice.rank(), 1);
        assert_eq!(s.canonical, kmin);
        assert_eq!(s.euler, 3);
        assert_eq!(s.signature, 1);
        assert!(s.exceptional.is_empty());
    }

    #[test]
    fn canonical_characteristic_through_k9() {
        let (form, kmin) = cp2_minimal();
        for k in 0..=9 {
            let s = blowup_surface(&form, &kmin, k).unwrap();
            assert!(s.lattice.is_characteristic(&s.canonical).unwrap());
        }
    }

    #[test]
    fn class_ci_examples() {
        let (form, kmin) = cp2_minimal();
        let s = blowup_surface(&form, &kmin, 2).unwrap();
        // I = {1}: 2E₁ − (−3H + E₁ + E₂) = 3H + E₁ − E₂
        assert_eq!(class_c_i(&s, &[1]).unwrap(), CohClass(vec![3, 1, -1]));
        // I = ∅: −K_X
        assert_eq!(class_c_i(&s, &[]).unwrap(), s.canonical.neg());
        assert!(matches!(
            class_c_i(&s, &[3]),
            Err(LatticeError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn expected_dimension_of_canonical_catalog() {
        // CP², a quadric stand-in (hyperbolic plane, K = (−2,−2)), and a
        // synthetic parity-satisfying model (rank 2, diag(1,−1), K = (3,1)).
        let (cp2_form, cp2_k) = cp2_minimal();
        let quadric = (
            CohomologyLattice::new(vec![vec![0, 1], vec![1, 0]], None).unwrap(),
            CohClass(vec![-2, -2]),
        );
        let synth = (
            CohomologyLattice::new(vec![vec![1, 0], vec![0, -1]], None).unwrap(),
            CohClass(vec![3, 1]),
        );
        for (form, kmin) in [(cp2_form, cp2_k), quadric, synth] {
            for k in 0..=6 {
                let s = blowup_surface(&form, &kmin, k).unwrap();
                assert!(is_almost_canonical(&s.canonical, &s).unwrap());
            }
        }
    }

    #[test]
    fn polarization_pairing_closed_form() {
        // c_I·H_n = 2|I| − k − n·(K_min·H_min), oracle = pair()
        let stand_in = (
            CohomologyLattice::new(vec![vec![1]], Some(vec!["H".into()])).unwrap(),
            CohClass(vec![1]),
        );
        let quadric = (
            CohomologyLattice::new(vec![vec![0, 1], vec![1, 0]], None).unwrap(),
            CohClass(vec![2, 2]),
        );
        let hmins = [CohClass(vec![1]), CohClass(vec![1, 1])];
        for ((form, kmin), hmin) in [stand_in, quadric].into_iter().zip(hmins) {
            for k in 0..=4usize {
                let s = blowup_surface(&form, &kmin, k).unwrap();
                let h_ext = s.extend_minimal(&hmin).unwrap();
                let d = s
                    .lattice
                    .pair_int(s.pullback_minimal_canonical.as_ref().unwrap(), &h_ext)
                    .unwrap();
                for mask in 0u32..(1 << k) {
                    let idx: Vec<usize> =
                        (0..k).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                    for n in 1..=7i64 {
                        let brute = ci_dot_polarization(&s, &hmin, &idx, n).unwrap();
                        let closed = 2 * idx.len() as i64 - k as i64 - n * d;
                        assert_eq!(brute, integer(closed));
                    }
                }
            }
        }
    }

    #[test]
    fn threshold_matches_scan() {
        let form = CohomologyLattice::new(vec![vec![1]], Some(vec!["H".into()])).unwrap();
        let kmin = CohClass(vec![1]); // stand-in with K_min·H_min = 1
        let hmin = CohClass(vec![1]);
        for k in 0..=5usize {
            let s = blowup_surface(&form, &kmin, k).unwrap();
            for mask in 0u32..(1 << k) {
                let idx: Vec<usize> =
                    (0..k).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                let thr = threshold_n(&s, &hmin, &idx).unwrap();
                // independent oracle: scan n
                let scan = (1..=50i64).find(|&n| {
                    ci_dot_polarization(&s, &hmin, &idx, n).unwrap() < integer(0)
                });
                assert_eq!(thr, scan, "k={k} mask={mask}");
            }
        }
        // spec instance: k = 2, |I| = 1, d = 1 → pairing −n, threshold 1
        let s = blowup_surface(&form, &kmin, 2).unwrap();
        for n in 1..=5 {
            assert_eq!(
                ci_dot_polarization(&s, &hmin, &[1], n).unwrap(),
                integer(-n)
            );
        }
        assert_eq!(threshold_n(&s, &hmin, &[1]).unwrap(), Some(1));
    }

    #[test]
    fn invalid_descriptor_rejected() {
        let lat = CohomologyLattice::new(vec![vec![1, 0], vec![0, -1]], None).unwrap();
        // non-characteristic canonical
        let err = SurfaceDescriptor::new(lat.clone(), 4, 0, CohClass(vec![2, 0]), vec![], None);
        assert!(matches!(err, Err(LatticeError::InvalidDescriptor { .. })));
        // wrong signature
        let err = SurfaceDescriptor::new(lat, 4, 2, CohClass(vec![1, 1]), vec![], None);
        assert!(matches!(err, Err(LatticeError::InvalidDescriptor { .. })));
    }
}
