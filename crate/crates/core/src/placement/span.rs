//! Smallest window over the merged candidate lists that contains at least one
//! candidate for every receive antenna.

use super::{CandidateSet, Side};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SpanSelection {
    /// One pick per receive antenna, in antenna order.
    pub chosen: Vec<f64>,
    pub span: f64,
    pub midpoint: f64,
}

impl SpanSelection {
    pub(crate) fn from_chosen(chosen: Vec<f64>, span: f64) -> Self {
        let lo = chosen.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = chosen.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Self {
            chosen,
            span,
            midpoint: 0.5 * (lo + hi),
        }
    }
}

/// Sliding-window minimum-span selection over one value list per antenna.
///
/// All values are merged and sorted; the right pointer grows the window until
/// every list is represented, then the left pointer shrinks it while coverage
/// holds. Among windows of equal span the first one found wins.
pub fn min_span(sets: &[Vec<f64>]) -> Result<SpanSelection> {
    if sets.is_empty() || sets.iter().any(|s| s.is_empty()) {
        return Err(Error::arg("candidate_sets", "every set must be non-empty"));
    }
    if sets.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::arg("candidate_sets", "candidates must be finite"));
    }
    let mut merged: Vec<(f64, usize)> = sets
        .iter()
        .enumerate()
        .flat_map(|(m, s)| s.iter().map(move |&x| (x, m)))
        .collect();
    merged.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let lists = sets.len();
    let mut count = vec![0usize; lists];
    let mut covered = 0;
    let mut left = 0;
    let mut best: Option<(f64, usize, usize)> = None;

    for right in 0..merged.len() {
        let m = merged[right].1;
        count[m] += 1;
        if count[m] == 1 {
            covered += 1;
        }
        while covered == lists {
            let width = merged[right].0 - merged[left].0;
            if best.is_none_or(|(w, _, _)| width < w) {
                best = Some((width, left, right));
            }
            let m = merged[left].1;
            count[m] -= 1;
            if count[m] == 0 {
                covered -= 1;
            }
            left += 1;
        }
    }

    let (_, l, r) = best.expect("every list non-empty, so some window covers all");
    let window = &merged[l..=r];
    let mut chosen: Vec<Option<f64>> = vec![None; lists];
    // the endpoints belong to different antennas in a minimal window
    chosen[window[window.len() - 1].1] = Some(window[window.len() - 1].0);
    chosen[window[0].1] = Some(window[0].0);
    for &(x, m) in window {
        chosen[m].get_or_insert(x);
    }
    let chosen: Vec<f64> = chosen.into_iter().map(|c| c.expect("window covers all")).collect();
    let lo = chosen.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = chosen.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(SpanSelection::from_chosen(chosen, hi - lo))
}

/// Minimum-span selection over per-antenna candidate sets.
///
/// The scan runs outward from the reference position, so on the left branch
/// equal-span ties go to the window nearest the already placed PAs.
pub fn min_span_select(sets: &[CandidateSet]) -> Result<SpanSelection> {
    let leftward = sets.first().is_some_and(|s| s.side == Side::Left);
    if sets.iter().any(|s| (s.side == Side::Left) != leftward) {
        return Err(Error::arg("candidate_sets", "all sets must belong to the same branch"));
    }
    if !leftward {
        let values: Vec<Vec<f64>> = sets.iter().map(CandidateSet::positions).collect();
        return min_span(&values);
    }
    let mirrored: Vec<Vec<f64>> = sets
        .iter()
        .map(|s| s.candidates.iter().rev().map(|c| -c.x).collect())
        .collect();
    let sel = min_span(&mirrored)?;
    let chosen: Vec<f64> = sel.chosen.iter().map(|x| -x).collect();
    Ok(SpanSelection::from_chosen(chosen, sel.span))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::exhaustive_min_span;
    use proptest::prelude::*;

    #[test]
    fn two_lists() {
        let s = min_span(&[vec![1.0, 10.0], vec![2.0, 11.0]]).unwrap();
        assert_eq!(s.chosen, vec![1.0, 2.0]);
        assert_eq!(s.span, 1.0);
        assert_eq!(s.midpoint, 1.5);
    }

    #[test]
    fn shared_value() {
        let s = min_span(&[vec![0.3, 4.0], vec![-1.0, 4.0], vec![4.0]]).unwrap();
        assert_eq!(s.span, 0.0);
        assert_eq!(s.midpoint, 4.0);
    }

    #[test]
    fn three_lists() {
        let s = min_span(&[vec![0.0, 6.0], vec![3.0], vec![2.0, 7.0]]).unwrap();
        assert_eq!(s.chosen, vec![0.0, 3.0, 2.0]);
        assert_eq!(s.span, 3.0);
        assert_eq!(s.midpoint, 1.5);
    }

    #[test]
    fn first_minimal_window_wins_ties() {
        let s = min_span(&[vec![0.0, 5.0], vec![1.0, 6.0]]).unwrap();
        assert_eq!(s.chosen, vec![0.0, 1.0]);
    }

    #[test]
    fn single_list_picks_smallest() {
        let s = min_span(&[vec![3.0, 1.0, 2.0]]).unwrap();
        assert_eq!((s.chosen.clone(), s.span), (vec![1.0], 0.0));
    }

    #[test]
    fn rejects_empty() {
        assert!(min_span(&[]).is_err());
        assert!(min_span(&[vec![1.0], vec![]]).is_err());
        assert!(min_span(&[vec![f64::NAN]]).is_err());
    }

    proptest! {
        #[test]
        fn matches_exhaustive(sets in prop::collection::vec(prop::collection::vec(0.0f64..1.0, 1..=6), 1..=4)) {
            let fast = min_span(&sets).unwrap();
            let slow = exhaustive_min_span(&sets).unwrap();
            prop_assert_eq!(fast.span, slow.span);
            prop_assert_eq!(fast.chosen.len(), sets.len());
            for (pick, set) in fast.chosen.iter().zip(&sets) {
                prop_assert!(set.contains(pick));
            }
        }

        #[test]
        fn duplicated_list_changes_nothing(sets in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 1..=5), 1..=3)) {
            let base = min_span(&sets).unwrap();
            let mut dup = sets.clone();
            dup.push(sets[0].clone());
            let s = min_span(&dup).unwrap();
            prop_assert_eq!(s.span, base.span);
            prop_assert_eq!(s.midpoint, base.midpoint);
        }
    }
}
