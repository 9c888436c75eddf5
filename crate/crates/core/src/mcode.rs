//! Ensembles of heterogeneous code components with componentwise metrics.
//!
//! An ensemble is an ordered tuple of m >= 1 pairwise distinct, non-nested
//! components, each either a linear rank-distance code or a circulant rank
//! code. Every metric aggregates componentwise: ranks, distances, minimum
//! distances, covering radii and divisors are tuples of the single-code
//! values. Classification emits every taxonomy label the component profile
//! matches.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::budget::EnumBudget;
use crate::circulant::{CirculantRankCode, CirculantWord};
use crate::code::LinearRdCode;
use crate::error::{Error, Result};
use crate::extremal::{exact_multi_cov, sampled_multi_cov, CoverMode, CoveringReport, XorSpace};
use crate::gf2::RankVector;
use crate::rank_metric::rank_norm;

/// One ensemble component.
#[derive(Debug, Clone)]
pub enum Component {
    Linear(LinearRdCode),
    Circulant(CirculantRankCode),
}

/// An element of a component's ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentWord {
    Vector(RankVector),
    Word(CirculantWord),
}

/// Metric profile of one component, the basis for every taxonomy label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentProfile {
    pub is_linear: bool,
    pub len: usize,
    pub dim: usize,
    pub min_distance: usize,
    pub is_mrd: bool,
    pub is_amrd: bool,
    pub is_cyclic: bool,
    pub divisor: usize,
}

impl Component {
    pub fn profile(&self, budget: EnumBudget) -> Result<ComponentProfile> {
        match self {
            Component::Linear(code) => {
                let report = code.classify(budget)?;
                Ok(ComponentProfile {
                    is_linear: true,
                    len: code.len(),
                    dim: code.dim(),
                    min_distance: report.d,
                    is_mrd: report.is_mrd,
                    is_amrd: report.is_amrd,
                    is_cyclic: false,
                    divisor: report.divisor,
                })
            }
            Component::Circulant(code) => Ok(ComponentProfile {
                is_linear: false,
                len: code.len(),
                dim: code.dim(),
                min_distance: code.min_distance(),
                is_mrd: false,
                is_amrd: false,
                is_cyclic: code.is_cyclic(),
                divisor: code.divisor(),
            }),
        }
    }

    fn rank_of(&self, word: &ComponentWord) -> Result<usize> {
        match (self, word) {
            (Component::Linear(code), ComponentWord::Vector(v)) => {
                if v.context() != code.context() || v.len() != code.len() {
                    return Err(Error::ShapeMismatch { expected: code.len(), got: v.len() });
                }
                Ok(rank_norm(v))
            }
            (Component::Circulant(code), ComponentWord::Word(w)) => {
                if w.len() != code.len() {
                    return Err(Error::ShapeMismatch { expected: code.len(), got: w.len() });
                }
                Ok(w.norm())
            }
            _ => Err(Error::InvalidParameter("word kind does not match component kind")),
        }
    }

    fn distance_of(&self, a: &ComponentWord, b: &ComponentWord) -> Result<usize> {
        match (a, b) {
            (ComponentWord::Vector(x), ComponentWord::Vector(y)) => {
                self.rank_of(&ComponentWord::Vector(x.add(y)?))
            }
            (ComponentWord::Word(x), ComponentWord::Word(y)) => {
                self.rank_of(&ComponentWord::Word(x.add(y)?))
            }
            _ => Err(Error::InvalidParameter("word kinds do not match")),
        }
    }

    fn multi_covering(
        &self,
        m: u64,
        mode: CoverMode,
        budget: EnumBudget,
    ) -> Result<CoveringReport> {
        match self {
            Component::Linear(code) => {
                crate::extremal::multi_covering_radius(code, m, mode, budget)
            }
            Component::Circulant(code) => {
                let len = code.len();
                budget.check(len as u32)?;
                let norms: Vec<u8> = (0..1u64 << len)
                    .map(|p| CirculantWord::new(len, p).unwrap().norm() as u8)
                    .collect();
                let space = XorSpace { bits: len as u32, norms };
                let words: Vec<u64> = code.words().map(|w| w.poly()).collect();
                let basis: Vec<u64> = code.basis().iter().map(|w| w.poly()).collect();
                let radius = match mode {
                    CoverMode::Exact => exact_multi_cov(&space, &words, Some(basis), m, budget)?,
                    CoverMode::Sampled { samples, seed } => {
                        sampled_multi_cov(&space, &words, m, samples, seed, budget)?
                    }
                };
                Ok(CoveringReport {
                    code_size: words.len() as u64,
                    multiplicity: m,
                    radius,
                    exact: matches!(mode, CoverMode::Exact),
                })
            }
        }
    }

    /// Set equality / containment against another component, when the two
    /// live in the same ambient space. `None` when not comparable.
    fn compare(&self, other: &Component) -> Option<(bool, bool, bool)> {
        match (self, other) {
            (Component::Linear(a), Component::Linear(b)) => {
                if a.context() != b.context() || a.len() != b.len() {
                    return None;
                }
                let stacked = a.generator().stack(b.generator()).ok()?;
                let joint = stacked.rank();
                // row spaces: containment when stacking adds no rank
                let a_in_b = joint == b.dim();
                let b_in_a = joint == a.dim();
                Some((a_in_b && b_in_a, a_in_b, b_in_a))
            }
            (Component::Circulant(a), Component::Circulant(b)) => {
                if a.len() != b.len() {
                    return None;
                }
                let mut rows: Vec<u64> = a.basis().iter().map(|w| w.poly()).collect();
                rows.extend(b.basis().iter().map(|w| w.poly()));
                let joint = crate::gf2::rank_of_words(&mut rows);
                let a_in_b = joint == b.dim();
                let b_in_a = joint == a.dim();
                Some((a_in_b && b_in_a, a_in_b, b_in_a))
            }
            _ => None,
        }
    }
}

/// Taxonomy labels; an ensemble may carry several.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum TaxonomyLabel {
    RdMCode,
    Bicode,
    Tricode,
    MrdMCode,
    AmrdMCode,
    SemiMrdBicode,
    /// mrd MRD components alongside plain RD components, m >= 3.
    QuasiMrd {
        mrd: usize,
        plain: usize,
    },
    SemiCirculantTypeI,
    SemiCirculantTypeII,
    SemicyclicCirculantTypeI,
    SemicyclicCirculantTypeII,
    SemicyclicCirculant,
    MixedQuasiCirculant,
    MixedCirculant,
    MDivisible,
    SemidivisibleRd,
    SemidivisibleMrd,
    SemidivisibleCirculant,
    SemidivisibleAmrd,
    QuasiDivisibleRd,
    QuasiDivisibleMrd,
    QuasiDivisibleCirculant,
    QuasiDivisibleAmrd,
}

impl fmt::Display for TaxonomyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = match self {
            TaxonomyLabel::RdMCode => "rd-m-code".into(),
            TaxonomyLabel::Bicode => "bicode".into(),
            TaxonomyLabel::Tricode => "tricode".into(),
            TaxonomyLabel::MrdMCode => "mrd-m-code".into(),
            TaxonomyLabel::AmrdMCode => "amrd-m-code".into(),
            TaxonomyLabel::SemiMrdBicode => "semi-mrd-bicode".into(),
            TaxonomyLabel::QuasiMrd { mrd, plain } => format!("quasi-({mrd},{plain})-mrd"),
            TaxonomyLabel::SemiCirculantTypeI => "semi-circulant-type-I".into(),
            TaxonomyLabel::SemiCirculantTypeII => "semi-circulant-type-II".into(),
            TaxonomyLabel::SemicyclicCirculantTypeI => "semicyclic-circulant-type-I".into(),
            TaxonomyLabel::SemicyclicCirculantTypeII => "semicyclic-circulant-type-II".into(),
            TaxonomyLabel::SemicyclicCirculant => "semicyclic-circulant".into(),
            TaxonomyLabel::MixedQuasiCirculant => "mixed-quasi-circulant".into(),
            TaxonomyLabel::MixedCirculant => "mixed-circulant".into(),
            TaxonomyLabel::MDivisible => "m-divisible".into(),
            TaxonomyLabel::SemidivisibleRd => "semidivisible-rd".into(),
            TaxonomyLabel::SemidivisibleMrd => "semidivisible-mrd".into(),
            TaxonomyLabel::SemidivisibleCirculant => "semidivisible-circulant".into(),
            TaxonomyLabel::SemidivisibleAmrd => "semidivisible-amrd".into(),
            TaxonomyLabel::QuasiDivisibleRd => "quasi-divisible-rd".into(),
            TaxonomyLabel::QuasiDivisibleMrd => "quasi-divisible-mrd".into(),
            TaxonomyLabel::QuasiDivisibleCirculant => "quasi-divisible-circulant".into(),
            TaxonomyLabel::QuasiDivisibleAmrd => "quasi-divisible-amrd".into(),
        };
        f.write_str(&text)
    }
}

/// An ordered tuple of pairwise distinct, non-nested code components.
#[derive(Debug, Clone)]
pub struct Ensemble {
    components: Vec<Component>,
}

impl Ensemble {
    /// Validates pairwise distinctness and non-containment. Components in
    /// different ambient spaces (different kind, field, or length) are never
    /// comparable and pass vacuously.
    pub fn new(components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyInput);
        }
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                if let Some((equal, i_in_j, j_in_i)) = components[i].compare(&components[j]) {
                    if equal {
                        return Err(Error::DuplicateComponent { first: i, second: j });
                    }
                    if i_in_j {
                        return Err(Error::NestedComponent { inner: i, outer: j });
                    }
                    if j_in_i {
                        return Err(Error::NestedComponent { inner: j, outer: i });
                    }
                }
            }
        }
        Ok(Ensemble { components })
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    fn check_arity<T>(&self, items: &[T]) -> Result<()> {
        if items.len() != self.components.len() {
            return Err(Error::ShapeMismatch { expected: self.components.len(), got: items.len() });
        }
        Ok(())
    }

    /// Componentwise rank tuple of an ensemble word.
    pub fn rank_tuple(&self, words: &[ComponentWord]) -> Result<Vec<usize>> {
        self.check_arity(words)?;
        self.components.iter().zip(words).map(|(c, w)| c.rank_of(w)).collect()
    }

    /// Componentwise distance tuple between two ensemble words.
    pub fn distance_tuple(&self, xs: &[ComponentWord], ys: &[ComponentWord]) -> Result<Vec<usize>> {
        self.check_arity(xs)?;
        self.check_arity(ys)?;
        self.components
            .iter()
            .zip(xs.iter().zip(ys))
            .map(|(c, (x, y))| c.distance_of(x, y))
            .collect()
    }

    /// Tuple of per-component minimum distances.
    pub fn min_distance_tuple(&self, budget: EnumBudget) -> Result<Vec<usize>> {
        self.components.iter().map(|c| Ok(c.profile(budget)?.min_distance)).collect()
    }

    /// Tuple of per-component error-correction radii floor((d_i - 1) / 2).
    pub fn correction_tuple(&self, budget: EnumBudget) -> Result<Vec<usize>> {
        Ok(self.min_distance_tuple(budget)?.iter().map(|d| (d - 1) / 2).collect())
    }

    /// Tuple of per-component m_i-covering radii.
    pub fn covering_tuple(
        &self,
        multiplicities: &[u64],
        mode: CoverMode,
        budget: EnumBudget,
    ) -> Result<Vec<CoveringReport>> {
        self.check_arity(multiplicities)?;
        self.components
            .iter()
            .zip(multiplicities)
            .map(|(c, &m)| c.multi_covering(m, mode, budget))
            .collect()
    }

    /// Tuple of per-component divisors; the ensemble is divisible when every
    /// entry exceeds one.
    pub fn divisor_tuple(&self, budget: EnumBudget) -> Result<Vec<usize>> {
        self.components.iter().map(|c| Ok(c.profile(budget)?.divisor)).collect()
    }

    /// Every taxonomy label matching the component profiles.
    pub fn classify(&self, budget: EnumBudget) -> Result<Vec<TaxonomyLabel>> {
        let profiles: Vec<ComponentProfile> =
            self.components.iter().map(|c| c.profile(budget)).collect::<Result<_>>()?;
        Ok(labels_for(&profiles))
    }
}

fn labels_for(profiles: &[ComponentProfile]) -> Vec<TaxonomyLabel> {
    let m = profiles.len();
    let mut labels = vec![TaxonomyLabel::RdMCode];
    if m == 2 {
        labels.push(TaxonomyLabel::Bicode);
    }
    if m == 3 {
        labels.push(TaxonomyLabel::Tricode);
    }

    let all_linear = profiles.iter().all(|p| p.is_linear);
    let all_circulant = profiles.iter().all(|p| !p.is_linear);
    let mrd = profiles.iter().filter(|p| p.is_linear && p.is_mrd).count();
    let plain = profiles.iter().filter(|p| p.is_linear && !p.is_mrd).count();
    let circulant = profiles.iter().filter(|p| !p.is_linear).count();
    let cyclic = profiles.iter().filter(|p| !p.is_linear && p.is_cyclic).count();
    let divisible = profiles.iter().filter(|p| p.divisor > 1).count();

    if all_linear && mrd == m {
        labels.push(TaxonomyLabel::MrdMCode);
    }
    if all_linear && profiles.iter().all(|p| p.is_amrd) {
        labels.push(TaxonomyLabel::AmrdMCode);
    }
    if m == 2 && all_linear && mrd == 1 && plain == 1 {
        labels.push(TaxonomyLabel::SemiMrdBicode);
    }
    if m >= 3 && all_linear && mrd >= 1 && plain >= 1 {
        labels.push(TaxonomyLabel::QuasiMrd { mrd, plain });
    }
    if m == 2 && circulant == 1 {
        let lin = profiles.iter().find(|p| p.is_linear);
        let circ = profiles.iter().find(|p| !p.is_linear).expect("one circulant");
        if let Some(lin) = lin {
            if !lin.is_mrd {
                labels.push(TaxonomyLabel::SemiCirculantTypeI);
                if circ.is_cyclic {
                    labels.push(TaxonomyLabel::SemicyclicCirculantTypeI);
                }
            } else {
                labels.push(TaxonomyLabel::SemiCirculantTypeII);
                if circ.is_cyclic {
                    labels.push(TaxonomyLabel::SemicyclicCirculantTypeII);
                }
            }
        }
    }
    if m == 2 && circulant == 2 && cyclic >= 1 {
        labels.push(TaxonomyLabel::SemicyclicCirculant);
    }
    if m >= 3 && plain >= 1 && mrd >= 1 && cyclic >= 1 && circulant - cyclic >= 1 {
        labels.push(TaxonomyLabel::MixedQuasiCirculant);
    }
    if m >= 3 && all_circulant && cyclic >= 1 && cyclic < m {
        labels.push(TaxonomyLabel::MixedCirculant);
    }
    if divisible == m {
        labels.push(TaxonomyLabel::MDivisible);
    }
    if m == 2 && all_linear && divisible == 1 {
        let other = profiles.iter().find(|p| p.divisor <= 1).expect("one not divisible");
        labels.push(TaxonomyLabel::SemidivisibleRd);
        if other.is_mrd {
            labels.push(TaxonomyLabel::SemidivisibleMrd);
        }
        if other.is_amrd {
            labels.push(TaxonomyLabel::SemidivisibleAmrd);
        }
    }
    // one circulant paired with a divisible linear code; the circulant's own
    // divisor plays no role
    if m == 2 && circulant == 1 {
        if let Some(lin) = profiles.iter().find(|p| p.is_linear) {
            if lin.divisor > 1 {
                labels.push(TaxonomyLabel::SemidivisibleCirculant);
            }
        }
    }
    if m >= 3 && all_linear && divisible >= 1 && divisible < m {
        labels.push(TaxonomyLabel::QuasiDivisibleRd);
        if profiles.iter().all(|p| p.is_mrd) {
            labels.push(TaxonomyLabel::QuasiDivisibleMrd);
        }
        if profiles.iter().filter(|p| p.divisor <= 1).all(|p| p.is_amrd) {
            labels.push(TaxonomyLabel::QuasiDivisibleAmrd);
        }
    }
    // circulants alongside divisible linear codes and nothing else
    if m >= 3
        && circulant >= 1
        && profiles.iter().any(|p| p.is_linear)
        && profiles.iter().all(|p| !p.is_linear || p.divisor > 1)
    {
        labels.push(TaxonomyLabel::QuasiDivisibleCirculant);
    }
    labels
}
