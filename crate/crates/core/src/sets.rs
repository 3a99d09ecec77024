//! Ground sets, subsets as bit-vectors, canonical subset families and
//! validated topologies.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// Largest ground set whose subset families can be materialized.
pub const MAX_GROUND_SIZE: usize = 16;

/// An ordered finite set of named irreducible assertions.
///
/// Element `i` (in construction order) occupies bit `i` of every [`Subset`]
/// over this ground set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    /// Builds a ground set, assigning bit indices in list order.
    pub fn new<I, S>(labels: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND_SIZE {
            return Err(Error::TooManyElements {
                requested: labels.len(),
                max: MAX_GROUND_SIZE,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel { index: i });
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels })
    }

    /// The ground set with no elements. Its only subset is `φ = X`.
    pub fn empty() -> Self {
        GroundSet::default()
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// True for the degenerate empty ground set.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Labels in bit order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of the element at bit `index`.
    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.get(index).map(String::as_str)
    }

    /// Bit index of `label`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The whole set `X`.
    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// `X - s`.
    pub fn complement(&self, s: Subset) -> Subset {
        s.complement_within(self.len())
    }

    /// True when `s` has no bits beyond this ground set's width.
    pub fn admits(&self, s: Subset) -> bool {
        s.is_subset_of(self.full())
    }

    /// The subset holding exactly the named elements.
    pub fn subset<'a, I>(&self, labels: I) -> Result<Subset, Error>
    where
        I: IntoIterator<Item = &'a str>,
    {
        labels.into_iter().try_fold(Subset::EMPTY, |acc, label| {
            self.index_of(label)
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::UnknownLabel(label.into()))
        })
    }

    /// Labels of the members of `s`, in element order.
    pub fn labels_of(&self, s: Subset) -> impl Iterator<Item = &str> + '_ {
        s.indices().filter_map(move |i| self.label(i))
    }

    /// The ground set made of the elements of `a`, keeping their relative order.
    pub fn restrict(&self, a: Subset) -> GroundSet {
        GroundSet {
            labels: a
                .indices()
                .filter_map(|i| self.labels.get(i).cloned())
                .collect(),
        }
    }

    /// Re-expresses `s` over `superset` by label identity. `None` if some
    /// element of `s` is not a label of `superset`.
    pub fn embed(&self, s: Subset, superset: &GroundSet) -> Option<Subset> {
        s.indices().try_fold(Subset::EMPTY, |acc, i| {
            superset.index_of(&self.labels[i]).map(|j| acc.with(j))
        })
    }

    /// Every subset of `X`.
    pub fn power_set(&self) -> SubsetFamily {
        let top = self.full().bits();
        SubsetFamily::from_sorted((0..=top).map(Subset)).unwrap_or_default()
    }
}

/// A subset of a ground set, as a bit-vector (bit `i` = element `i`).
///
/// Only bits below the ground set's size may be set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u32);

impl Subset {
    /// The empty set `φ`.
    pub const EMPTY: Subset = Subset(0);

    /// The subset whose bit pattern is `bits`.
    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    /// The full set on `width` elements.
    pub const fn full(width: usize) -> Self {
        if width >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << width) - 1)
        }
    }

    /// The singleton `{index}`.
    pub const fn singleton(index: usize) -> Self {
        Subset(1 << index)
    }

    /// The raw bit pattern.
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Membership of element `index`.
    pub const fn contains(self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    /// `self ∪ {index}`.
    pub const fn with(self, index: usize) -> Self {
        Subset(self.0 | 1 << index)
    }

    /// `self ∪ other`.
    pub const fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    /// `self ∩ other`.
    pub const fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    /// `self - other`.
    pub const fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// `self ⊆ other`.
    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// True for `φ`.
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Cardinality.
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Complement inside a ground set of `width` elements.
    pub const fn complement_within(self, width: usize) -> Self {
        Subset(!self.0 & Subset::full(width).0)
    }

    /// Indices of the members, ascending.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        })
    }

    /// Re-indexes `self ∩ carrier` onto the ground set `restrict(carrier)`:
    /// the `k`-th element of `carrier` becomes bit `k`.
    pub fn pack(self, carrier: Subset) -> Subset {
        carrier
            .indices()
            .enumerate()
            .filter(|&(_, i)| self.contains(i))
            .fold(Subset::EMPTY, |acc, (k, _)| acc.with(k))
    }

    /// Inverse of [`Subset::pack`]: maps bit `k` back to the `k`-th element of
    /// `carrier`.
    pub fn unpack(self, carrier: Subset) -> Subset {
        carrier
            .indices()
            .enumerate()
            .filter(|&(k, _)| self.contains(k))
            .fold(Subset::EMPTY, |acc, (_, i)| acc.with(i))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// A duplicate-free collection of subsets in ascending bit-vector order.
///
/// Two families are equal iff their member lists are identical.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetFamily {
    members: Vec<Subset>,
}

impl SubsetFamily {
    /// The empty collection (not to be confused with `{φ}`).
    pub fn new() -> Self {
        SubsetFamily::default()
    }

    /// Builds `members` from an already strictly ascending sequence.
    fn from_sorted<I: IntoIterator<Item = Subset>>(members: I) -> Option<Self> {
        let members: Vec<Subset> = members.into_iter().collect();
        members
            .windows(2)
            .all(|w| w[0] < w[1])
            .then_some(SubsetFamily { members })
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    /// Iterates the members in canonical order.
    pub fn iter(&self) -> core::iter::Copied<core::slice::Iter<'_, Subset>> {
        self.members.iter().copied()
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// True for the empty collection.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Membership test.
    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// Union of all members (`φ` for the empty collection).
    pub fn union_all(&self) -> Subset {
        self.iter().fold(Subset::EMPTY, Subset::union)
    }

    /// Members of `self` that are not members of `other`.
    pub fn difference(&self, other: &SubsetFamily) -> SubsetFamily {
        self.filter(|s| !other.contains(s))
    }

    /// Members common to both families.
    pub fn intersection(&self, other: &SubsetFamily) -> SubsetFamily {
        self.filter(|s| other.contains(s))
    }

    /// True when every member of `self` is a member of `other`.
    pub fn is_subfamily_of(&self, other: &SubsetFamily) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// The members satisfying `keep`; order is preserved so no re-sort is needed.
    pub fn filter(&self, mut keep: impl FnMut(Subset) -> bool) -> SubsetFamily {
        SubsetFamily {
            members: self.iter().filter(|&s| keep(s)).collect(),
        }
    }

    /// Applies `f` to every member and re-canonicalizes.
    pub fn map(&self, f: impl FnMut(Subset) -> Subset) -> SubsetFamily {
        self.iter().map(f).collect()
    }
}

impl FromIterator<Subset> for SubsetFamily {
    fn from_iter<I: IntoIterator<Item = Subset>>(iter: I) -> Self {
        let mut members: Vec<Subset> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SubsetFamily { members }
    }
}

impl<'a> IntoIterator for &'a SubsetFamily {
    type Item = Subset;
    type IntoIter = core::iter::Copied<core::slice::Iter<'a, Subset>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// Dense membership bitmap over all subsets of a ground set.
struct SubsetIndex {
    words: Vec<u64>,
}

impl SubsetIndex {
    fn new(width: usize) -> Self {
        let slots = 1usize << width;
        SubsetIndex {
            words: vec![0; slots.div_ceil(64)],
        }
    }

    fn of(family: &SubsetFamily, width: usize) -> Self {
        let mut index = SubsetIndex::new(width);
        for s in family {
            index.insert(s);
        }
        index
    }

    fn contains(&self, s: Subset) -> bool {
        let b = s.bits() as usize;
        self.words
            .get(b / 64)
            .is_some_and(|w| w & (1 << (b % 64)) != 0)
    }

    /// Returns true if `s` was not present.
    fn insert(&mut self, s: Subset) -> bool {
        let b = s.bits() as usize;
        let word = &mut self.words[b / 64];
        let mask = 1 << (b % 64);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }
}

/// The topology axiom a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// Members must be subsets of `X`.
    Range,
    /// `φ` and `X` are open.
    C1,
    /// Unions of opens are open.
    C2,
    /// Intersections of two opens are open.
    C3,
}

impl Axiom {
    /// Short name (`"C1"`, `"C2"`, `"C3"` or `"range"`).
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Range => "range",
            Axiom::C1 => "C1",
            Axiom::C2 => "C2",
            Axiom::C3 => "C3",
        }
    }
}

/// The first axiom violation found in a candidate family, with a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomViolation {
    /// A member has elements outside the ground set.
    OutOfRange {
        /// The offending member.
        member: Subset,
    },
    /// `φ` is not a member.
    MissingEmpty,
    /// `X` is not a member.
    MissingWhole,
    /// `left ∪ right` is not a member.
    UnionMissing {
        /// First operand.
        left: Subset,
        /// Second operand.
        right: Subset,
        /// The missing union.
        union: Subset,
    },
    /// `left ∩ right` is not a member.
    IntersectionMissing {
        /// First operand.
        left: Subset,
        /// Second operand.
        right: Subset,
        /// The missing intersection.
        intersection: Subset,
    },
}

impl AxiomViolation {
    /// Which axiom is violated.
    pub fn axiom(&self) -> Axiom {
        match self {
            AxiomViolation::OutOfRange { .. } => Axiom::Range,
            AxiomViolation::MissingEmpty | AxiomViolation::MissingWhole => Axiom::C1,
            AxiomViolation::UnionMissing { .. } => Axiom::C2,
            AxiomViolation::IntersectionMissing { .. } => Axiom::C3,
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::OutOfRange { member } => {
                write!(f, "member {member} lies outside the ground set")
            }
            AxiomViolation::MissingEmpty => f.write_str("C1: the empty set is missing"),
            AxiomViolation::MissingWhole => f.write_str("C1: the whole set is missing"),
            AxiomViolation::UnionMissing { left, right, union } => {
                write!(f, "C2: {left} ∪ {right} = {union} is missing")
            }
            AxiomViolation::IntersectionMissing {
                left,
                right,
                intersection,
            } => write!(f, "C3: {left} ∩ {right} = {intersection} is missing"),
        }
    }
}

/// Checks axioms C1-C3, reporting the first violation.
///
/// Checks run in the order range, C1, C2, C3. C2 is checked on pairs: a finite
/// family closed under binary union is closed under every union.
pub fn check_topology(family: &SubsetFamily, ground: &GroundSet) -> Result<(), AxiomViolation> {
    if let Some(member) = family.iter().find(|&s| !ground.admits(s)) {
        return Err(AxiomViolation::OutOfRange { member });
    }
    if !family.contains(Subset::EMPTY) {
        return Err(AxiomViolation::MissingEmpty);
    }
    if !family.contains(ground.full()) {
        return Err(AxiomViolation::MissingWhole);
    }
    let index = SubsetIndex::of(family, ground.len());
    let members = family.members();
    for (i, &left) in members.iter().enumerate() {
        for &right in &members[i + 1..] {
            let union = left.union(right);
            if !index.contains(union) {
                return Err(AxiomViolation::UnionMissing { left, right, union });
            }
        }
    }
    for (i, &left) in members.iter().enumerate() {
        for &right in &members[i + 1..] {
            let intersection = left.intersection(right);
            if !index.contains(intersection) {
                return Err(AxiomViolation::IntersectionMissing {
                    left,
                    right,
                    intersection,
                });
            }
        }
    }
    Ok(())
}

/// True iff `family` is a topology on `ground`.
pub fn is_topology(family: &SubsetFamily, ground: &GroundSet) -> bool {
    check_topology(family, ground).is_ok()
}

/// The smallest topology containing every member of `family`.
///
/// # Panics
///
/// If a member has elements outside `ground`.
pub fn generated_topology(family: &SubsetFamily, ground: &GroundSet) -> Topology {
    assert!(
        family.iter().all(|s| ground.admits(s)),
        "generating family has members outside the ground set"
    );
    let mut index = SubsetIndex::new(ground.len());
    let mut opens = Vec::with_capacity(family.len() + 2);
    for s in [Subset::EMPTY, ground.full()]
        .into_iter()
        .chain(family.iter())
    {
        if index.insert(s) {
            opens.push(s);
        }
    }
    // Each newly found set is combined once with every set found before it.
    let mut next = 0;
    while next < opens.len() {
        let fresh = opens[next];
        for j in 0..=next {
            let other = opens[j];
            for s in [fresh.intersection(other), fresh.union(other)] {
                if index.insert(s) {
                    opens.push(s);
                }
            }
        }
        next += 1;
    }
    Topology::from_parts(opens.into_iter().collect(), Arc::new(ground.clone()))
}

/// A topology on a ground set: a question whose open sets are its answers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Topology {
    ground: Arc<GroundSet>,
    family: SubsetFamily,
}

impl Topology {
    /// Validates `family` against C1-C3.
    pub fn new(family: SubsetFamily, ground: impl Into<Arc<GroundSet>>) -> Result<Self, Error> {
        let ground = ground.into();
        check_topology(&family, &ground)?;
        Ok(Topology { ground, family })
    }

    /// Wraps a family already known to be a topology.
    pub(crate) fn from_parts(family: SubsetFamily, ground: Arc<GroundSet>) -> Self {
        debug_assert_eq!(check_topology(&family, &ground), Ok(()));
        Topology { ground, family }
    }

    /// `{φ, X}`.
    pub fn indiscrete(ground: impl Into<Arc<GroundSet>>) -> Self {
        let ground = ground.into();
        let family = [Subset::EMPTY, ground.full()].into_iter().collect();
        Topology { ground, family }
    }

    /// The power set of `X`.
    pub fn discrete(ground: impl Into<Arc<GroundSet>>) -> Self {
        let ground = ground.into();
        let family = ground.power_set();
        Topology { ground, family }
    }

    /// The ground set `X`.
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Shared handle to the ground set.
    pub fn ground_arc(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// The open sets.
    pub fn family(&self) -> &SubsetFamily {
        &self.family
    }

    /// True when `s` is open.
    pub fn is_open(&self, s: Subset) -> bool {
        self.family.contains(s)
    }

    /// True when `X - s` is open.
    pub fn is_closed(&self, s: Subset) -> bool {
        self.ground.admits(s) && self.family.contains(self.ground.complement(s))
    }

    /// Open and closed at once.
    pub fn is_clopen(&self, s: Subset) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    /// True when every subset is open.
    pub fn is_discrete(&self) -> bool {
        self.family.len() == 1usize << self.ground.len()
    }
}
