//! Exhaustive enumeration of the question space on small ground sets.
//!
//! On `n ≤ 5` points there are at most 32 subsets, so a subset family fits in
//! a `u32` whose bit `s` marks subset `s` as a member ("family code"). The
//! search decides the non-trivial subsets in ascending order, trying
//! inclusion before exclusion. Families come out ascending by their sorted
//! member lists.
//!
//! A branch is cut as soon as it cannot complete to a topology:
//!
//! * including `c` requires `m ∩ c` to be present for every member `m` decided
//!   so far (that intersection is smaller than `c`, hence already decided);
//! * including `c` makes every `m ∪ c` above `c` required, and a required
//!   subset cannot be excluded later.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::calculus::QuestionType;
use crate::sets::{GroundSet, Subset, SubsetFamily, Topology};
use crate::Error;

/// Largest ground set whose topologies can be enumerated.
pub const MAX_ENUMERATION_SIZE: usize = 5;

fn check_size(n: usize) -> Result<(), Error> {
    if n > MAX_ENUMERATION_SIZE {
        Err(Error::EnumerationLimit {
            size: n,
            max: MAX_ENUMERATION_SIZE,
        })
    } else {
        Ok(())
    }
}

/// Subsets every emitted family must contain (`forced`) or avoid (`forbidden`),
/// as family codes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Constraints {
    /// Members every result contains.
    pub forced: u32,
    /// Subsets no result contains.
    pub forbidden: u32,
}

/// Splits the search space of `n`-point topologies by their smallest
/// non-trivial open set; the last part is the indiscrete topology.
///
/// Concatenating the parts' outputs in the returned order reproduces the
/// unconstrained stream exactly.
pub fn first_open_partitions(n: usize) -> Result<Vec<Constraints>, Error> {
    check_size(n)?;
    let full = Subset::full(n).bits();
    if full <= 1 {
        return Ok(vec![Constraints::default()]);
    }
    let below = |k: u32| ((1u32 << k) - 1) & !1;
    let mut parts: Vec<Constraints> = (1..full)
        .map(|k| Constraints {
            forced: 1 << k,
            forbidden: below(k),
        })
        .collect();
    parts.push(Constraints {
        forced: 0,
        forbidden: below(full),
    });
    Ok(parts)
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    candidate: u32,
    family: u32,
    required: u32,
}

/// Depth-first stream of the family codes of all topologies on `n` points
/// that satisfy a set of [`Constraints`].
#[derive(Clone, Debug)]
pub struct FamilyCodes {
    full: u32,
    constraints: Constraints,
    stack: Vec<Frame>,
}

/// Family codes of every topology on `n` points meeting `constraints`, in
/// ascending canonical order.
pub fn family_codes(n: usize, constraints: Constraints) -> Result<FamilyCodes, Error> {
    check_size(n)?;
    let full = Subset::full(n).bits();
    let trivial = 1 | 1u32 << full;
    let mut stack = Vec::new();
    if constraints.forbidden & trivial == 0 && constraints.forced & constraints.forbidden == 0 {
        stack.push(Frame {
            candidate: full.min(1),
            family: 1,
            required: 0,
        });
    }
    Ok(FamilyCodes {
        full,
        constraints,
        stack,
    })
}

impl FamilyCodes {
    /// Requirements after adding `c` to `family`, or `None` if that breaks
    /// closure.
    fn include(&self, family: u32, required: u32, c: u32) -> Option<u32> {
        let mut required = required;
        let mut rest = family;
        while rest != 0 {
            let m = rest.trailing_zeros();
            rest &= rest - 1;
            if family & (1 << (m & c)) == 0 {
                return None;
            }
            let union = m | c;
            if union != c {
                if self.constraints.forbidden & (1 << union) != 0 {
                    return None;
                }
                required |= 1 << union;
            }
        }
        Some(required)
    }
}

impl Iterator for FamilyCodes {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        while let Some(frame) = self.stack.pop() {
            let Frame {
                candidate: c,
                family,
                required,
            } = frame;
            if c == self.full {
                return Some(family | 1 << self.full);
            }
            let bit = 1u32 << c;
            // Exclusion is pushed first so inclusion is explored first.
            if (required | self.constraints.forced) & bit == 0 {
                self.stack.push(Frame {
                    candidate: c + 1,
                    family,
                    required,
                });
            }
            if self.constraints.forbidden & bit == 0 {
                if let Some(required) = self.include(family, required, c) {
                    self.stack.push(Frame {
                        candidate: c + 1,
                        family: family | bit,
                        required,
                    });
                }
            }
        }
        None
    }
}

/// The family whose members are the set bits of `code`.
pub fn decode_family(code: u32) -> SubsetFamily {
    Subset::from_bits(code)
        .indices()
        .map(|s| Subset::from_bits(s as u32))
        .collect()
}

/// Family code of `family`, if every member is below 32.
pub fn encode_family(family: &SubsetFamily) -> Option<u32> {
    family
        .iter()
        .try_fold(0u32, |acc, s| (s.bits() < 32).then(|| acc | 1 << s.bits()))
}

/// Stream of topologies over one ground set.
#[derive(Clone, Debug)]
pub struct Topologies {
    ground: Arc<GroundSet>,
    codes: FamilyCodes,
}

impl Topologies {
    /// Wraps a code stream for `ground`.
    pub fn new(ground: Arc<GroundSet>, codes: FamilyCodes) -> Self {
        Topologies { ground, codes }
    }
}

impl Iterator for Topologies {
    type Item = Topology;

    fn next(&mut self) -> Option<Topology> {
        let code = self.codes.next()?;
        Some(Topology::from_parts(
            decode_family(code),
            self.ground.clone(),
        ))
    }
}

/// Every topology on `ground`, once each, in ascending canonical order.
pub fn enumerate_topologies(ground: &GroundSet) -> Result<Topologies, Error> {
    let codes = family_codes(ground.len(), Constraints::default())?;
    Ok(Topologies::new(Arc::new(ground.clone()), codes))
}

/// Number of topologies on `n` points.
pub fn count_topologies(n: usize) -> Result<u64, Error> {
    Ok(family_codes(n, Constraints::default())?.count() as u64)
}

/// Topologies in which resolving `x` gives a definite answer: every non-empty
/// open set contains `x`.
pub fn find_definite_questions(ground: &GroundSet, x: &str) -> Result<Topologies, Error> {
    let i = ground
        .index_of(x)
        .ok_or_else(|| Error::UnknownLabel(x.into()))?;
    check_size(ground.len())?;
    let full = ground.full().bits();
    let forbidden = (1..full)
        .filter(|s| s & (1 << i) == 0)
        .fold(0u32, |acc, s| acc | 1 << s);
    let codes = family_codes(
        ground.len(),
        Constraints {
            forced: 0,
            forbidden,
        },
    )?;
    Ok(Topologies::new(Arc::new(ground.clone()), codes))
}

/// Topologies on `superset` that contain every open set of `t`, with subsets
/// matched by label. At most `limit` are produced.
pub fn parent_questions(
    t: &Topology,
    superset: &GroundSet,
    limit: Option<usize>,
) -> Result<core::iter::Take<Topologies>, Error> {
    if let Some(label) = t
        .ground()
        .labels()
        .iter()
        .find(|l| superset.index_of(l).is_none())
    {
        return Err(Error::UnknownLabel(label.clone()));
    }
    check_size(superset.len())?;
    let forced = t
        .family()
        .iter()
        .filter_map(|u| t.ground().embed(u, superset))
        .fold(0u32, |acc, u| acc | 1 << u.bits());
    let codes = family_codes(
        superset.len(),
        Constraints {
            forced,
            forbidden: 0,
        },
    )?;
    Ok(Topologies::new(Arc::new(superset.clone()), codes).take(limit.unwrap_or(usize::MAX)))
}

/// Number of assertions one resolution of `x` removes from the space: the
/// points outside the carrier for a sub-question, all of them for a definite
/// answer, none for an irrelevant question.
pub fn elimination_efficiency(t: &Topology, x: &str) -> usize {
    let outcome = t.classify_question(x);
    match outcome.kind() {
        QuestionType::TypeI => t.ground().len() - outcome.carrier().map_or(0, Subset::len),
        QuestionType::TypeII => t.ground().len(),
        QuestionType::TypeIII => 0,
    }
}

/// Per-point tally of question types over a question space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PointCensus {
    /// Label of the point.
    pub point: alloc::string::String,
    /// Topologies whose resolution at this point is a sub-question.
    pub type_i: u64,
    /// Topologies with a definite answer at this point.
    pub type_ii: u64,
}

/// Summary of the question space on one ground set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationReport {
    /// Ground-set size.
    pub n: usize,
    /// Number of topologies.
    pub count: u64,
    /// One entry per point, in element order.
    pub census: Vec<PointCensus>,
    /// Topologies equal to their own negation.
    pub self_dual_count: u64,
}

impl EnumerationReport {
    /// Builds the report from a stream of topologies on `ground`.
    pub fn from_topologies<'a, I>(ground: &GroundSet, topologies: I) -> Self
    where
        I: IntoIterator<Item = &'a Topology>,
    {
        let mut report = EnumerationReport {
            n: ground.len(),
            census: ground
                .labels()
                .iter()
                .map(|l| PointCensus {
                    point: l.clone(),
                    ..PointCensus::default()
                })
                .collect(),
            ..EnumerationReport::default()
        };
        for t in topologies {
            report.count += 1;
            if t.machines_agree() {
                report.self_dual_count += 1;
            }
            for entry in &mut report.census {
                match t.classify_question(&entry.point).kind() {
                    QuestionType::TypeI => entry.type_i += 1,
                    QuestionType::TypeII => entry.type_ii += 1,
                    QuestionType::TypeIII => {}
                }
            }
        }
        report
    }
}

/// Enumerates `ground` and summarizes the result.
pub fn enumeration_report(ground: &GroundSet) -> Result<EnumerationReport, Error> {
    let all: Vec<Topology> = enumerate_topologies(ground)?.collect();
    Ok(EnumerationReport::from_topologies(ground, &all))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms() -> GroundSet {
        GroundSet::new(["m", "s"]).unwrap()
    }

    #[test]
    fn counts_for_small_n() {
        let counts: Vec<u64> = (0..=5).map(|n| count_topologies(n).unwrap()).collect();
        assert_eq!(counts, [1, 1, 4, 29, 355, 6942]);
        assert_eq!(
            count_topologies(6),
            Err(Error::EnumerationLimit { size: 6, max: 5 })
        );
    }

    #[test]
    fn two_point_space_in_order() {
        let all: Vec<u32> = family_codes(2, Constraints::default()).unwrap().collect();
        // {φ,{m},{s},X}, {φ,{m},X}, {φ,{s},X}, {φ,X}
        assert_eq!(all, [0b1111, 0b1011, 0b1101, 0b1001]);
    }

    #[test]
    fn empty_ground_set() {
        let all: Vec<Topology> = enumerate_topologies(&GroundSet::empty()).unwrap().collect();
        assert_eq!(all, [Topology::discrete(GroundSet::empty())]);
    }

    #[test]
    fn partitions_concatenate_to_full_stream() {
        for n in 0..=4 {
            let whole: Vec<u32> = family_codes(n, Constraints::default()).unwrap().collect();
            let parts: Vec<u32> = first_open_partitions(n)
                .unwrap()
                .into_iter()
                .flat_map(|c| family_codes(n, c).unwrap())
                .collect();
            assert_eq!(parts, whole, "n = {n}");
        }
    }

    #[test]
    fn contradictory_constraints_yield_nothing() {
        let c = Constraints {
            forced: 0b10,
            forbidden: 0b10,
        };
        assert_eq!(family_codes(2, c).unwrap().count(), 0);
        let c = Constraints {
            forced: 0,
            forbidden: 1,
        };
        assert_eq!(family_codes(2, c).unwrap().count(), 0);
    }

    #[test]
    fn codes_round_trip() {
        for code in family_codes(3, Constraints::default()).unwrap() {
            assert_eq!(encode_family(&decode_family(code)), Some(code));
        }
        let wide: SubsetFamily = [Subset::from_bits(40)].into_iter().collect();
        assert_eq!(encode_family(&wide), None);
    }

    #[test]
    fn definite_questions_on_two_points() {
        let g = ms();
        let found: Vec<Topology> = find_definite_questions(&g, "m").unwrap().collect();
        let t2: SubsetFamily = [0, 1, 3].into_iter().map(Subset::from_bits).collect();
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].family(), &t2);
        assert_eq!(found[1], Topology::indiscrete(g.clone()));
        assert_eq!(
            find_definite_questions(&g, "q").unwrap_err(),
            Error::UnknownLabel("q".into())
        );

        let m = GroundSet::new(["m"]).unwrap();
        let single: Vec<Topology> = find_definite_questions(&m, "m").unwrap().collect();
        assert_eq!(single, [Topology::indiscrete(m)]);
    }

    #[test]
    fn parents_of_a_point_question() {
        let m = GroundSet::new(["m"]).unwrap();
        let t = Topology::discrete(m);
        let g = ms();
        let parents: Vec<Topology> = parent_questions(&t, &g, None).unwrap().collect();
        assert_eq!(parents.len(), 2);
        assert_eq!(parents[0], Topology::discrete(g.clone()));
        let t2: SubsetFamily = [0, 1, 3].into_iter().map(Subset::from_bits).collect();
        assert_eq!(parents[1].family(), &t2);

        let limited: Vec<Topology> = parent_questions(&t, &g, Some(1)).unwrap().collect();
        assert_eq!(limited.len(), 1);

        let q = GroundSet::new(["q"]).unwrap();
        assert_eq!(
            parent_questions(&Topology::discrete(q), &g, None).unwrap_err(),
            Error::UnknownLabel("q".into())
        );
    }

    #[test]
    fn a_question_is_its_own_parent() {
        let g = GroundSet::new(["m", "s", "e"]).unwrap();
        for t in enumerate_topologies(&g).unwrap() {
            let parents: Vec<Topology> = parent_questions(&t, &g, None).unwrap().collect();
            assert!(parents.contains(&t));
        }
    }

    #[test]
    fn efficiency_examples() {
        let g = GroundSet::new(["m", "s", "e"]).unwrap();
        let t_x = Topology::new(
            [0b000, 0b001, 0b011, 0b101, 0b111]
                .into_iter()
                .map(Subset::from_bits)
                .collect(),
            g.clone(),
        )
        .unwrap();
        assert_eq!(elimination_efficiency(&t_x, "e"), 1);
        assert_eq!(elimination_efficiency(&t_x, "m"), 3);
        assert_eq!(elimination_efficiency(&t_x, "q"), 0);
        let d = Topology::discrete(g);
        for p in ["m", "s", "e"] {
            assert_eq!(elimination_efficiency(&d, p), 1);
        }
    }

    #[test]
    fn report_on_two_points() {
        let report = enumeration_report(&ms()).unwrap();
        assert_eq!(report.n, 2);
        assert_eq!(report.count, 4);
        assert_eq!(report.self_dual_count, 2);
        // m is definite in T2 and the indiscrete topology
        assert_eq!(report.census[0].type_ii, 2);
        for entry in &report.census {
            assert_eq!(entry.type_i + entry.type_ii, report.count);
        }
    }
}
