use fixedbitset::FixedBitSet;

use super::Search;
use crate::error::{Error, Result};

/// Minimum set cover by branching on the uncovered element with the fewest
/// remaining candidate sets. Sets already tried at a node are excluded from
/// its later siblings, so each cover is explored once.
pub(crate) fn min_set_cover(
    ground: usize,
    sets: &[Vec<usize>],
    search: &mut Search,
) -> Result<Vec<usize>> {
    let bits: Vec<FixedBitSet> = sets
        .iter()
        .map(|s| {
            let mut b = FixedBitSet::with_capacity(ground);
            for &e in s {
                b.insert(e);
            }
            b
        })
        .collect();
    let mut members = vec![Vec::new(); ground];
    for (i, s) in sets.iter().enumerate() {
        for &e in s {
            members[e].push(i);
        }
    }
    if let Some(e) = members.iter().position(Vec::is_empty) {
        return Err(Error::Infeasible(format!("element {e} belongs to no set")));
    }

    let mut state = State {
        bits: &bits,
        members: &members,
        best: greedy(ground, &bits),
        chosen: Vec::new(),
        excluded: FixedBitSet::with_capacity(sets.len()),
    };
    let uncovered = {
        let mut u = FixedBitSet::with_capacity(ground);
        u.insert_range(..);
        u
    };
    state.branch(uncovered, search)?;
    let mut best = state.best;
    best.sort_unstable();
    Ok(best)
}

fn greedy(ground: usize, bits: &[FixedBitSet]) -> Vec<usize> {
    let mut uncovered = FixedBitSet::with_capacity(ground);
    uncovered.insert_range(..);
    let mut chosen = Vec::new();
    while uncovered.count_ones(..) > 0 {
        let (i, _) = bits
            .iter()
            .enumerate()
            .map(|(i, b)| (i, b.intersection(&uncovered).count()))
            .max_by_key(|&(i, gain)| (gain, std::cmp::Reverse(i)))
            .expect("feasible instance has sets");
        uncovered.difference_with(&bits[i]);
        chosen.push(i);
    }
    chosen
}

struct State<'a> {
    bits: &'a [FixedBitSet],
    members: &'a [Vec<usize>],
    best: Vec<usize>,
    chosen: Vec<usize>,
    excluded: FixedBitSet,
}

impl State<'_> {
    fn branch(&mut self, uncovered: FixedBitSet, search: &mut Search) -> Result<()> {
        search.tick()?;
        let left = uncovered.count_ones(..);
        if left == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if self.chosen.len() + 1 >= self.best.len() {
            return Ok(());
        }
        let max_gain = self
            .bits
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.excluded.contains(*i))
            .map(|(_, b)| b.intersection(&uncovered).count())
            .max()
            .unwrap_or(0);
        if max_gain == 0 {
            return Ok(());
        }
        if self.chosen.len() + left.div_ceil(max_gain) >= self.best.len() {
            return Ok(());
        }

        // uncovered element with fewest available sets
        let mut target = None;
        let mut fewest = usize::MAX;
        for e in uncovered.ones() {
            let k = self.members[e]
                .iter()
                .filter(|&&i| !self.excluded.contains(i))
                .count();
            if k < fewest {
                fewest = k;
                target = Some(e);
                if k <= 1 {
                    break;
                }
            }
        }
        let e = target.expect("uncovered is non-empty");
        if fewest == 0 {
            return Ok(());
        }
        let mut options: Vec<(usize, usize)> = self.members[e]
            .iter()
            .filter(|&&i| !self.excluded.contains(i))
            .map(|&i| (i, self.bits[i].intersection(&uncovered).count()))
            .collect();
        options.sort_by_key(|&(i, gain)| (std::cmp::Reverse(gain), i));

        let mut newly_excluded = Vec::new();
        let mut result = Ok(());
        for (i, _) in options {
            let mut next = uncovered.clone();
            next.difference_with(&self.bits[i]);
            self.chosen.push(i);
            result = self.branch(next, search);
            self.chosen.pop();
            if result.is_err() {
                break;
            }
            self.excluded.insert(i);
            newly_excluded.push(i);
        }
        for i in newly_excluded {
            self.excluded.set(i, false);
        }
        result
    }
}
