use super::{check_vertices, OracleBudget, Search};
use crate::error::{Error, Result};
use crate::instance::CnfInstance;

const HARD_LIMIT: usize = 40;

/// Best assignment by enumerating all `2^num_vars` assignments with clauses
/// packed as bit masks. The lowest-numbered optimal assignment (variable 0 as
/// the least significant bit) wins.
pub(crate) fn max_sat(
    cnf: &CnfInstance,
    budget: &OracleBudget,
    search: &mut Search,
) -> Result<Vec<bool>> {
    let nv = cnf.num_vars();
    check_vertices("max-sat enumeration (variables)", nv, budget)?;
    if nv > HARD_LIMIT {
        return Err(Error::TooLarge {
            what: "max-sat enumeration",
            size: nv,
            limit: HARD_LIMIT,
        });
    }
    let masks: Vec<(u64, u64)> = cnf
        .clauses()
        .iter()
        .map(|c| {
            c.iter().fold((0u64, 0u64), |(p, n), l| {
                if l.positive {
                    (p | 1 << l.var, n)
                } else {
                    (p, n | 1 << l.var)
                }
            })
        })
        .collect();
    let mut best = (0usize, 0u64);
    let mut first = true;
    for a in 0..1u64 << nv {
        if a & 1023 == 0 {
            search.tick()?;
        }
        let sat = masks
            .iter()
            .filter(|&&(p, n)| a & p != 0 || !a & n != 0)
            .count();
        if first || sat > best.0 {
            best = (sat, a);
            first = false;
        }
    }
    Ok((0..nv).map(|v| best.1 >> v & 1 == 1).collect())
}
