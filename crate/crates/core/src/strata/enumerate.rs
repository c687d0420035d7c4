use crate::pattern::SingularityPattern;

struct Walk {
    target: i64,
    max_points: usize,
    allow_marked: bool,
    out: Vec<SingularityPattern>,
}

impl Walk {
    fn rec(&mut self, prefix: &mut Vec<i64>, max_val: i64, sum: i64) {
        if sum == self.target && !prefix.is_empty() {
            self.out
                .push(SingularityPattern::new(prefix.clone()).expect("valid by construction"));
        }
        let slots = (self.max_points - prefix.len()) as i64;
        if slots == 0 {
            return;
        }
        for v in (-1..=max_val).rev() {
            if v == 0 && !self.allow_marked {
                continue;
            }
            let rest = self.target - sum - v;
            let rest_slots = slots - 1;
            // the remaining entries lie in [-1, v]
            if rest < -rest_slots || rest > rest_slots * v.max(0) {
                continue;
            }
            prefix.push(v);
            self.rec(prefix, v, sum + v);
            prefix.pop();
        }
    }
}

/// Non-empty patterns with sum `4g - 4`, entries in `[-1, max_order]`,
/// at most `max_points` entries; zeros only when `allow_marked`.
/// Output is in lexicographic order of the canonical (non-increasing) lists.
pub fn enumerate_patterns(
    genus: u32,
    max_order: i64,
    max_points: usize,
    allow_marked: bool,
) -> Vec<SingularityPattern> {
    let mut walk = Walk {
        target: 4 * genus as i64 - 4,
        max_points,
        allow_marked,
        out: Vec::new(),
    };
    walk.rec(&mut Vec::new(), max_order, 0);
    walk.out.sort();
    walk.out
}

/// All zero-free strata of genus `g` with between 1 and `max_n` singularities.
pub fn enumerate_strata(genus: u32, max_n: usize) -> Vec<SingularityPattern> {
    // an entry can be at most 4g - 4 plus one per pole
    let max_order = 4 * genus as i64 - 4 + max_n as i64;
    enumerate_patterns(genus, max_order.max(1), max_n, false)
}
