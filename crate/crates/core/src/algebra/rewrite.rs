use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Path, QuiverWithRelations};

/// Length-two rewrite rules `[u, v] -> [v', u']` read off the relations.
///
/// A relation whose sides are both of length two, one with a strictly
/// decreasing variable pair and the other with an increasing pair, orients
/// from the decreasing side to the increasing side. All other relations are
/// ignored here and left to the linear-algebra oracle.
#[derive(Clone, Debug, Default)]
pub struct RewriteSystem {
    rules: HashMap<(ArrowId, ArrowId), (ArrowId, ArrowId)>,
}

impl RewriteSystem {
    pub fn new(qwr: &QuiverWithRelations) -> Self {
        let q = &qwr.quiver;
        let mut rules = HashMap::new();
        for r in &qwr.relations {
            let (Ok(lv), Ok(rv)) = (r.lhs.vars(q), r.rhs.vars(q)) else {
                continue;
            };
            if lv.len() != 2 || rv.len() != 2 {
                continue;
            }
            let pair = |p: &Path| (p.arrows()[0], p.arrows()[1]);
            if lv[0] > lv[1] && rv[0] <= rv[1] {
                rules.insert(pair(&r.lhs), pair(&r.rhs));
            } else if rv[0] > rv[1] && lv[0] <= lv[1] {
                rules.insert(pair(&r.rhs), pair(&r.lhs));
            }
        }
        Self { rules }
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Positions `t` where steps `t, t+1` form an inversion of the variables.
    pub fn inversions(&self, qwr: &QuiverWithRelations, path: &Path) -> Result<Vec<usize>> {
        let vars = path.vars(&qwr.quiver)?;
        Ok((0..vars.len().saturating_sub(1))
            .filter(|&t| vars[t] > vars[t + 1])
            .collect())
    }

    /// Rewrites the adjacent pair at `position`, which must be an inversion.
    pub fn apply(&self, path: &Path, position: usize) -> Result<Path> {
        let a = path.arrows();
        let key = (a[position], a[position + 1]);
        let &(first, second) = self.rules.get(&key).ok_or(Error::MissingRelationInstance {
            first: key.0,
            second: key.1,
        })?;
        let mut arrows = a.to_vec();
        arrows[position] = first;
        arrows[position + 1] = second;
        Ok(Path::from_parts_unchecked(path.start(), arrows))
    }
}

/// Number of pairs `s < t` with `vars[s] > vars[t]`.
pub fn inversion_count(vars: &[usize]) -> usize {
    let mut count = 0;
    for s in 0..vars.len() {
        for t in s + 1..vars.len() {
            if vars[s] > vars[t] {
                count += 1;
            }
        }
    }
    count
}

/// Rewrites `path` to the representative whose variable sequence is weakly
/// increasing, always resolving the leftmost adjacent inversion first.
///
/// Each step swaps one adjacent inverted pair of variables, so the inversion
/// count drops by exactly one and the loop terminates.
pub fn normal_form(qwr: &QuiverWithRelations, path: &Path) -> Result<Path> {
    normal_form_with(qwr, &RewriteSystem::new(qwr), path)
}

pub fn normal_form_with(
    qwr: &QuiverWithRelations,
    system: &RewriteSystem,
    path: &Path,
) -> Result<Path> {
    let q = &qwr.quiver;
    let mut current = Path::new(q, path.start(), path.arrows().to_vec())?;
    let mut vars = current.vars(q)?;
    let mut inversions = inversion_count(&vars);
    while let Some(t) = (0..vars.len().saturating_sub(1)).find(|&t| vars[t] > vars[t + 1]) {
        current = system.apply(&current, t)?;
        vars = current.vars(q)?;
        let next = inversion_count(&vars);
        debug_assert_eq!(next + 1, inversions, "rewrite must remove one inversion");
        inversions = next;
    }
    Ok(current)
}

pub fn is_normal(qwr: &QuiverWithRelations, path: &Path) -> Result<bool> {
    let vars = path.vars(&qwr.quiver)?;
    Ok(vars.windows(2).all(|p| p[0] <= p[1]))
}
