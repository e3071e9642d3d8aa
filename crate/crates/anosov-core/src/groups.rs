//! Concrete matrix-group models and word enumeration: a rank-2 free group
//! and a genus-2 surface group in SL(3,ℝ), ball generating sets, explicit
//! quasi-isometry constants (Milnor-Schwarz and the classical Morse lemma),
//! and a desk-scale verifier that checks the local Morse criteria directly
//! on enumerated orbit segments.
//!
//! Both built-in models preserve a totally geodesic copy of ℍ² (of curvature
//! −1/3) inside the space of unit-determinant SPD matrices, which makes their
//! geometry independently checkable against 2×2 hyperbolic formulas.
//!
//! Element identity is decided numerically: the canonical key of a matrix is
//! its entry list rounded to 9 decimal digits after sign normalization. This
//! is adequate at desk scale, where distinct elements of the models below are
//! separated by displacement gaps far above 1e-6; exact algebraic arithmetic
//! is out of scope.

use crate::l2g::{MorseQIParams, StraightSpacedParams};
use crate::policy::NumericPolicy;
use crate::symspace::{
    cartan_vector, zeta_angle, GroupElement, ModelConstants, SpdPoint,
};
use nalgebra::DMatrix;
use thiserror::Error;

/// Hard cap on enumerated words (desk scale).
const WORD_CAP: usize = 10_000_000;
/// Hard cap on orbit segments examined by the local verifier.
const SEGMENT_CAP: u64 = 10_000_000;
/// Dedup rounding: canonical keys keep 9 decimal digits.
const KEY_SCALE: f64 = 1e9;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("tanh parameter T = {0} must lie in (1/sqrt(2), 1) for a cocompact action")]
    NotCocompact(f64),
    #[error("invalid generating set: {0}")]
    BadGenerators(String),
    #[error("invalid hyperbolicity input: {0}")]
    BadHyperbolicity(String),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("enumeration cap exceeded: {count} {unit} (cap {cap})")]
    EnumerationCap {
        count: u64,
        cap: u64,
        unit: &'static str,
    },
    #[error(transparent)]
    Geometry(#[from] crate::symspace::SymspaceError),
}

/// Canonical dedup key: entries scaled by 1e9 and rounded, after flipping the
/// overall sign so the first nonzero rounded entry is positive (group
/// elements that differ by a global sign act identically on SPD points).
pub fn canonical_key(m: &DMatrix<f64>) -> Vec<i64> {
    let mut key: Vec<i64> = m.iter().map(|&x| (x * KEY_SCALE).round() as i64).collect();
    if let Some(first) = key.iter().find(|&&x| x != 0) {
        if *first < 0 {
            for x in &mut key {
                *x = -*x;
            }
        }
    }
    key
}

/// How geodesic words are enumerated for a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordStructure {
    /// Reduced words in a free group: geodesic iff no letter is followed by
    /// its inverse.
    FreeReduced,
    /// Breadth-first layers with dedup: one shortest word per element, a true
    /// geodesic in the Cayley graph of the generating set.
    BallGenerated,
}

/// A finitely generated matrix group model: a labelled generating set closed
/// under inversion, plus the word structure used for geodesic enumeration.
#[derive(Debug, Clone)]
pub struct GroupModel {
    generators: Vec<(String, GroupElement)>,
    inverse_of: Vec<usize>,
    structure: WordStructure,
}

impl GroupModel {
    /// Validates: nonempty, distinct labels, identity not a generator, and
    /// the set closed under inversion (each generator's inverse present,
    /// matched by canonical key).
    pub fn new(
        generators: Vec<(String, GroupElement)>,
        structure: WordStructure,
    ) -> Result<GroupModel, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::BadGenerators("empty generating set".into()));
        }
        let d = generators[0].1.dim();
        let id_key = canonical_key(GroupElement::identity(d).matrix());
        let keys: Vec<Vec<i64>> = generators
            .iter()
            .map(|(_, g)| canonical_key(g.matrix()))
            .collect();
        for (i, (label, g)) in generators.iter().enumerate() {
            if g.dim() != d {
                return Err(GroupError::BadGenerators("mixed dimensions".into()));
            }
            if keys[i] == id_key {
                return Err(GroupError::BadGenerators(format!(
                    "generator '{label}' is the identity"
                )));
            }
            if generators.iter().skip(i + 1).any(|(l2, _)| l2 == label) {
                return Err(GroupError::BadGenerators(format!("duplicate label '{label}'")));
            }
        }
        let mut inverse_of = Vec::with_capacity(generators.len());
        for (label, g) in &generators {
            let inv_key = canonical_key(g.inverse().matrix());
            let j = keys.iter().position(|k| *k == inv_key).ok_or_else(|| {
                GroupError::BadGenerators(format!(
                    "generating set not symmetric: inverse of '{label}' missing"
                ))
            })?;
            inverse_of.push(j);
        }
        Ok(GroupModel {
            generators,
            inverse_of,
            structure,
        })
    }

    pub fn dim(&self) -> usize {
        self.generators[0].1.dim()
    }

    pub fn generators(&self) -> &[(String, GroupElement)] {
        &self.generators
    }

    /// Index of the inverse of generator `i`.
    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverse_of[i]
    }

    pub fn structure(&self) -> WordStructure {
        self.structure
    }

    /// The group element of a word (sequence of generator indices).
    pub fn word_element(&self, word: &[usize]) -> GroupElement {
        let mut g = GroupElement::identity(self.dim());
        for &i in word {
            g = g.mul(&self.generators[i].1);
        }
        g
    }

    /// Human-readable form of a word.
    pub fn word_label(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&i| self.generators[i].0.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// All geodesic words of length 1..=max_len. Free models enumerate
    /// reduced words; ball-generated models return one shortest word per
    /// distinct element (breadth-first with dedup).
    pub fn geodesic_words(&self, max_len: usize) -> Result<Vec<Vec<usize>>, GroupError> {
        match self.structure {
            WordStructure::FreeReduced => self.reduced_words(max_len),
            WordStructure::BallGenerated => self.bfs_words(max_len),
        }
    }

    fn reduced_words(&self, max_len: usize) -> Result<Vec<Vec<usize>>, GroupError> {
        let m = self.generators.len();
        let mut words: Vec<Vec<usize>> = Vec::new();
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * m);
            for w in &layer {
                for i in 0..m {
                    if let Some(&last) = w.last() {
                        if self.inverse_of[last] == i {
                            continue;
                        }
                    }
                    let mut w2 = w.clone();
                    w2.push(i);
                    next.push(w2);
                }
            }
            if words.len() + next.len() > WORD_CAP {
                return Err(GroupError::EnumerationCap {
                    count: (words.len() + next.len()) as u64,
                    cap: WORD_CAP as u64,
                    unit: "words",
                });
            }
            words.extend(next.iter().cloned());
            layer = next;
        }
        Ok(words)
    }

    fn bfs_words(&self, max_len: usize) -> Result<Vec<Vec<usize>>, GroupError> {
        let m = self.generators.len();
        let mut seen = std::collections::HashSet::new();
        seen.insert(canonical_key(GroupElement::identity(self.dim()).matrix()));
        let mut words: Vec<Vec<usize>> = Vec::new();
        let mut layer: Vec<(Vec<usize>, GroupElement)> =
            vec![(Vec::new(), GroupElement::identity(self.dim()))];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for (w, g) in &layer {
                for i in 0..m {
                    let g2 = g.mul(&self.generators[i].1);
                    if seen.insert(canonical_key(g2.matrix())) {
                        let mut w2 = w.clone();
                        w2.push(i);
                        next.push((w2, g2));
                    }
                }
            }
            if words.len() + next.len() > WORD_CAP {
                return Err(GroupError::EnumerationCap {
                    count: (words.len() + next.len()) as u64,
                    cap: WORD_CAP as u64,
                    unit: "words",
                });
            }
            words.extend(next.iter().map(|(w, _)| w.clone()));
            if next.is_empty() {
                break;
            }
            layer = next;
        }
        Ok(words)
    }
}

/// Explicit quasi-isometry data for the free model with tanh parameter T:
/// `c1_inv` is the lower quasi-isometry slope (minimum pairwise distance of
/// the Dirichlet-domain neighbors), `c3 = 2√3·atanh(T)` the upper slope
/// (generator displacement), and `r` the Morse constant (covering radius of
/// the orbit inside the invariant convex set).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeGroupConstants {
    pub c1_inv: f64,
    pub c3: f64,
    pub r: f64,
}

/// The three lengths entering `c1_inv`: the generator half-displacement and
/// the two logarithmic cross-gap terms of the Dirichlet octagon.
pub fn free_group_constants(t_param: f64) -> Result<FreeGroupConstants, GroupError> {
    if !(t_param * std::f64::consts::SQRT_2 > 1.0) || t_param >= 1.0 {
        return Err(GroupError::NotCocompact(t_param));
    }
    let sqrt3 = 3f64.sqrt();
    let t = t_param.atanh();
    let t2 = t_param * t_param;
    let root_a = (2.0 * t2 - 1.0).sqrt();
    let mid = 0.5 * ((t2 + root_a) / (t2 - root_a)).ln();
    let root_b = 2.0 * t_param * (1.0 - t2).sqrt();
    let third = 0.5 * ((1.0 + root_b) / (1.0 - root_b)).ln();
    let c1_inv = sqrt3 * t.min(mid).min(third);
    let c3 = 2.0 * sqrt3 * t;
    let r = sqrt3 * (1.0 / t2 - 2.0 + 2.0 * t2).sqrt().atanh();
    Ok(FreeGroupConstants { c1_inv, c3, r })
}

/// The free model: g = diag(e^t, 1, e^−t) and the conjugate hyperbolic
/// translation h (axis rotated by π/2 inside the invariant ℍ²), t = atanh(T).
pub fn free_group_generators(t_param: f64) -> Result<GroupModel, GroupError> {
    free_group_constants(t_param)?; // same domain restriction
    let t = t_param.atanh();
    let g = DMatrix::from_row_slice(
        3,
        3,
        &[t.exp(), 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, (-t).exp()],
    );
    let h = DMatrix::from_row_slice(
        3,
        3,
        &[
            t.cosh(),
            0.0,
            t.sinh(),
            0.0,
            1.0,
            0.0,
            t.sinh(),
            0.0,
            t.cosh(),
        ],
    );
    let g = GroupElement::new(g)?;
    let h = GroupElement::new(h)?;
    GroupModel::new(
        vec![
            ("g".into(), g.clone()),
            ("g^-1".into(), g.inverse()),
            ("h".into(), h.clone()),
            ("h^-1".into(), h.inverse()),
        ],
        WordStructure::FreeReduced,
    )
}

/// Rotation by θ in the (1,3)-plane.
fn plane_rotation(theta: f64) -> DMatrix<f64> {
    DMatrix::from_row_slice(
        3,
        3,
        &[
            theta.cos(),
            0.0,
            theta.sin(),
            0.0,
            1.0,
            0.0,
            -theta.sin(),
            0.0,
            theta.cos(),
        ],
    )
}

/// The genus-2 surface model: four hyperbolic translations of length
/// 2·acosh(cot π/8) along axes through the basepoint at angles
/// {0, π/8, π/4, 3π/8}, realized as conjugated diagonal matrices
/// R(θ)·diag(λ, 1, λ⁻¹)·R(−θ) with log λ = acosh(cot π/8), plus inverses.
pub fn surface_group_model() -> GroupModel {
    let theta0 = std::f64::consts::FRAC_PI_8;
    let log_lambda = (1.0 / theta0.tan()).acosh();
    let lambda = log_lambda.exp();
    let diag = DMatrix::from_row_slice(
        3,
        3,
        &[lambda, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0 / lambda],
    );
    let mut gens = Vec::with_capacity(8);
    for (label, k) in [("a", 0.0), ("b", 1.0), ("c", 2.0), ("d", 3.0)] {
        let rot = plane_rotation(k * theta0);
        let m = &rot * &diag * rot.transpose();
        let g = GroupElement::new((&m + m.transpose()) * 0.5)
            .expect("conjugated diagonal is a valid group element");
        gens.push((label.to_string(), g.clone()));
        gens.push((format!("{label}^-1"), g.inverse()));
    }
    GroupModel::new(gens, WordStructure::BallGenerated)
        .expect("surface generating set is symmetric by construction")
}

/// Covering radius of the surface-group orbit: the circumradius of the
/// fundamental octagon, R = √3·acosh(cot²(π/8)) by the hyperbolic law of
/// cosines at curvature −1/3.
pub fn surface_covering_radius() -> f64 {
    let cot = 1.0 / std::f64::consts::FRAC_PI_8.tan();
    3f64.sqrt() * (cot * cot).acosh()
}

/// A ball generating set together with its enumeration status.
#[derive(Debug, Clone)]
pub struct BallSet {
    /// Distinct non-identity elements with d(I, γ·I) ≤ radius, sorted by
    /// (displacement, canonical key) for determinism.
    pub elements: Vec<GroupElement>,
    /// False when depth_cap was reached while the final breadth-first layer
    /// still produced new elements within the radius (deeper products might
    /// contribute more); the listed elements are valid either way.
    pub complete: bool,
    pub depth_reached: usize,
}

/// All distinct group elements γ (products of the model's generators, up to
/// depth_cap letters) with d(I, γ·I) ≤ radius; the identity is excluded.
///
/// Breadth-first with dedup; a layer element is expanded further only if its
/// displacement can still return below the radius within the remaining depth
/// (triangle-inequality prune: prefixes of a shortest word for an in-radius
/// element stay within radius + remaining·max-generator-displacement).
pub fn ball_generating_set(
    model: &GroupModel,
    radius: f64,
    depth_cap: usize,
) -> Result<BallSet, GroupError> {
    if !(radius >= 0.0) {
        return Err(GroupError::BadInput(format!("radius = {radius} must be >= 0")));
    }
    // Displacement via singular values of the element itself: accurate to
    // machine precision even when the orbit point g·gᵀ is badly conditioned.
    let displacement =
        |g: &GroupElement| -> Result<f64, GroupError> { Ok(cartan_vector(g)?.riem_norm()) };
    let max_gen_disp = {
        let mut m = 0f64;
        for (_, g) in model.generators() {
            m = m.max(displacement(g)?);
        }
        m
    };

    let mut seen = std::collections::HashSet::new();
    seen.insert(canonical_key(GroupElement::identity(model.dim()).matrix()));
    let mut found: Vec<(f64, Vec<i64>, GroupElement)> = Vec::new();
    let mut layer: Vec<(GroupElement, f64)> = vec![(GroupElement::identity(model.dim()), 0.0)];
    let mut depth_reached = 0;
    let mut last_layer_hit_radius = false;

    for depth in 1..=depth_cap {
        let budget = radius + (depth_cap - depth) as f64 * max_gen_disp;
        let mut next = Vec::new();
        last_layer_hit_radius = false;
        for (g, _) in &layer {
            for (_, s) in model.generators() {
                let g2 = g.mul(s);
                let key = canonical_key(g2.matrix());
                if !seen.insert(key.clone()) {
                    continue;
                }
                let disp = displacement(&g2)?;
                if disp <= radius {
                    last_layer_hit_radius = true;
                    found.push((disp, key, g2.clone()));
                }
                if disp <= budget {
                    next.push((g2, disp));
                }
            }
        }
        depth_reached = depth;
        if next.is_empty() {
            last_layer_hit_radius = false;
            break;
        }
        if found.len() > WORD_CAP {
            return Err(GroupError::EnumerationCap {
                count: found.len() as u64,
                cap: WORD_CAP as u64,
                unit: "elements",
            });
        }
        layer = next;
    }

    found.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    Ok(BallSet {
        elements: found.into_iter().map(|(_, _, g)| g).collect(),
        complete: !last_layer_hit_radius,
        depth_reached,
    })
}

/// Quasi-isometry constants of an orbit map from a cocompact action with
/// covering radius R, using the ball generating set of radius 2R+1:
/// (c₁, c₂, c₃, c₄) = (1, 1, 2R+1, 0).
pub fn milnor_schwarz_constants(r: f64) -> Result<(f64, f64, f64, f64), GroupError> {
    if !(r > 0.0) {
        return Err(GroupError::BadInput(format!("covering radius R = {r} must be positive")));
    }
    Ok((1.0, 1.0, 2.0 * r + 1.0, 0.0))
}

/// Input for the classical (rank-1) Morse lemma: δ-hyperbolicity constant of
/// the target space and the quasi-isometry data M, l, a of the map
/// (d(yᵢ,yⱼ) ≤ M|j−i| and |j−i| ≤ l·d(yᵢ,yⱼ) + a).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicityInput {
    pub delta_hyp: f64,
    pub m: f64,
    pub l: f64,
    pub a: f64,
}

impl HyperbolicityInput {
    pub fn new(delta_hyp: f64, m: f64, l: f64, a: f64) -> Result<HyperbolicityInput, GroupError> {
        let all = [delta_hyp, m, l, a];
        if all.iter().any(|v| !v.is_finite() || *v <= 0.0) {
            return Err(GroupError::BadHyperbolicity(
                "delta, M, l, a must all be positive and finite".into(),
            ));
        }
        Ok(HyperbolicityInput { delta_hyp, m, l, a })
    }
}

/// Morse constants from the classical Morse lemma.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalMorseConstants {
    /// Least upper bound of {D : D−1 ≤ δ·|log₂(2D + 2M²l + 6DMl + aM)|}.
    pub d0: f64,
    /// R = D₀ + lMD₀ + lM² + a/2.
    pub r: f64,
}

/// Solve the defining inequality of the classical Morse lemma for D₀ by
/// monotone doubling plus bisection (the feasible set is an interval
/// [0, D₀]: the right side is concave in D, the left side linear), then
/// evaluate R. Absolute accuracy 1e-6; the returned D₀ lies on the feasible
/// side of the bracket.
pub fn classical_morse_constants(h: &HyperbolicityInput) -> ClassicalMorseConstants {
    let (delta, m, l, a) = (h.delta_hyp, h.m, h.l, h.a);
    let excess = |d: f64| -> f64 {
        let inner = 2.0 * d + 2.0 * m * m * l + 6.0 * d * m * l + a * m;
        (d - 1.0) - delta * inner.log2().abs()
    };
    // D = 1 is always feasible (left side 0). Double until infeasible.
    let mut lo = 1.0;
    let mut hi = 2.0;
    while excess(hi) <= 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    while hi - lo > 1e-7 {
        let mid = 0.5 * (lo + hi);
        if excess(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let d0 = lo;
    ClassicalMorseConstants {
        d0,
        r: d0 + l * m * d0 + l * m * m + a / 2.0,
    }
}

/// One verified criterion of the local Morse check: pass ⇔ worst observed
/// value ≥ threshold (vacuously true when nothing met the spacing).
#[derive(Debug, Clone)]
pub struct CriterionCheck {
    pub name: &'static str,
    /// Minimum observed value across all comparisons (+∞ if none).
    pub worst_value: f64,
    pub threshold: f64,
    /// The word and index pair realizing the worst value.
    pub witness: Option<String>,
    pub comparisons: u64,
    pub pass: bool,
}

impl CriterionCheck {
    fn from_worst(
        name: &'static str,
        threshold: f64,
        worst: Option<(f64, String)>,
        comparisons: u64,
        tol: f64,
    ) -> CriterionCheck {
        match worst {
            Some((value, witness)) => CriterionCheck {
                name,
                worst_value: value,
                threshold,
                witness: Some(witness),
                comparisons,
                pass: value >= threshold - tol,
            },
            None => CriterionCheck {
                name,
                worst_value: f64::INFINITY,
                threshold,
                witness: None,
                comparisons: 0,
                pass: true,
            },
        }
    }
}

/// Report of the desk-scale local Morse verification.
#[derive(Debug, Clone)]
pub struct LocalVerifyReport {
    pub words: usize,
    pub max_len: usize,
    /// Quasi-isometry sandwich (1/c₁)|N| − c₂ ≤ d(xᵢ, xᵢ₊ₙ) ≤ c₃|N| + c₄ on
    /// every orbit segment; worst value = minimum slack of either side.
    pub sandwich: CriterionCheck,
    /// regularity_margin ≥ α₀ for all segments of orbit length ≥ s; worst
    /// value = the minimum margin itself (threshold α₀).
    pub regularity: CriterionCheck,
    /// ζ-angle ≥ π − ε at interior points of the s-coarsified sequence.
    pub straightness: CriterionCheck,
}

impl LocalVerifyReport {
    pub fn pass(&self) -> bool {
        self.sandwich.pass && self.regularity.pass && self.straightness.pass
    }
}

/// Verify the local Morse criteria exhaustively on every geodesic word of
/// length ≤ max_len: (a) the quasi-isometry sandwich of `target` along the
/// orbit sequence, (b) (α₀,τ)-regularity of every segment of orbit length
/// ≥ `straightness.s`, (c) ζ-angle straightness (≥ π − ε) of the orbit
/// sequence coarsified at spacing s. Exhaustive but desk-scale only: errors
/// out beyond 10⁷ orbit segments.
pub fn local_morse_verify(
    model: &GroupModel,
    mc: &ModelConstants,
    target: &MorseQIParams,
    straightness: &StraightSpacedParams,
    max_len: usize,
) -> Result<LocalVerifyReport, GroupError> {
    let words = model.geodesic_words(max_len)?;
    let segments: u64 = words
        .iter()
        .map(|w| (w.len() as u64 + 1) * w.len() as u64 / 2)
        .sum();
    if segments > SEGMENT_CAP {
        return Err(GroupError::EnumerationCap {
            count: segments,
            cap: SEGMENT_CAP,
            unit: "orbit segments",
        });
    }

    let mut worst_sandwich: Option<(f64, String)> = None;
    let mut worst_regularity: Option<(f64, String)> = None;
    let mut worst_angle: Option<(f64, String)> = None;
    let (mut n_sandwich, mut n_regularity, mut n_angle) = (0u64, 0u64, 0u64);
    let record = |slot: &mut Option<(f64, String)>, value: f64, witness: String| {
        if slot.as_ref().map_or(true, |(v, _)| value < *v) {
            *slot = Some((value, witness));
        }
    };

    // All measurements are taken on segment elements based at the identity
    // (left-invariance of the metric): the segment x_i → x_j corresponds to
    // the letter product w_{i+1}···w_j, whose singular values give distance
    // and regularity to machine precision regardless of how far the segment
    // sits from the basepoint.
    let base = SpdPoint::identity(model.dim());
    for word in &words {
        let n_pts = word.len() + 1;
        // segment(i, j) = product of letters i..j (0-indexed, j exclusive).
        let mut segment: Vec<Vec<GroupElement>> = Vec::with_capacity(n_pts);
        for i in 0..n_pts {
            let mut row = Vec::with_capacity(n_pts - i);
            let mut g = GroupElement::identity(model.dim());
            row.push(g.clone());
            for &letter in &word[i..] {
                g = g.mul(&model.generators[letter].1);
                row.push(g.clone());
            }
            segment.push(row);
        }
        let seg_vec = |i: usize, j: usize| cartan_vector(&segment[i][j - i]);
        let label = model.word_label(word);

        // (a) sandwich and (b) regularity over all index pairs.
        for i in 0..n_pts {
            for j in (i + 1)..n_pts {
                let v = seg_vec(i, j)?;
                let n = (j - i) as f64;
                let dist = v.riem_norm();
                let lower_slack = dist - (n / target.c1 - target.c2);
                let upper_slack = (target.c3 * n + target.c4) - dist;
                n_sandwich += 1;
                record(
                    &mut worst_sandwich,
                    lower_slack.min(upper_slack),
                    format!("{label} [i={i}, j={j}]"),
                );
                if dist >= straightness.s && dist > 0.0 {
                    let margin = mc
                        .tau_mod
                        .iter()
                        .map(|&a| v.simple_root(a) / dist)
                        .fold(f64::INFINITY, f64::min);
                    n_regularity += 1;
                    record(&mut worst_regularity, margin, format!("{label} [i={i}, j={j}]"));
                }
            }
        }

        // (c) coarsify at spacing s, then check interior ζ-angles. The angle
        // at x_m between x_prev and x_next is translated to the basepoint:
        // ∠ζ_I(segment(prev,m)⁻¹·I, segment(m,next)·I).
        let mut coarse = vec![0usize];
        for i in 1..n_pts {
            if seg_vec(*coarse.last().unwrap(), i)?.riem_norm() >= straightness.s {
                coarse.push(i);
            }
        }
        for w in coarse.windows(3) {
            let back = segment[w[0]][w[1] - w[0]].inverse().orbit_point();
            let ahead = segment[w[1]][w[2] - w[1]].orbit_point();
            let angle = zeta_angle(&base, &back, &ahead, mc)?;
            n_angle += 1;
            record(
                &mut worst_angle,
                angle,
                format!("{label} [i={}, j={}, k={}]", w[0], w[1], w[2]),
            );
        }
    }

    // Measured distances carry relative floating-point error; the sandwich
    // sides can be met with equality (e.g. powers of one generator hit the
    // upper slope exactly), so its pass check allows the documented relative
    // distance tolerance at the largest distance scale in play.
    let dist_tol = NumericPolicy::global().rel_dist
        * (1.0 + target.c3 * max_len as f64 + target.c4);
    Ok(LocalVerifyReport {
        words: words.len(),
        max_len,
        sandwich: CriterionCheck::from_worst(
            "qi_sandwich",
            0.0,
            worst_sandwich,
            n_sandwich,
            dist_tol,
        ),
        regularity: CriterionCheck::from_worst(
            "regularity_margin",
            target.alpha0,
            worst_regularity,
            n_regularity,
            0.0,
        ),
        straightness: CriterionCheck::from_worst(
            "zeta_straightness",
            std::f64::consts::PI - straightness.epsilon,
            worst_angle,
            n_angle,
            0.0,
        ),
    })
}
