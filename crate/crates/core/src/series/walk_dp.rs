use num_bigint::BigUint;
use num_traits::Zero;

use crate::paths::WalkStep;

/// `table[l][s]` = number of valid walks of length `l` from `(h, 0)` to `(s, 0)`.
///
/// States are `(x, y, flag)` where the flag records that the last step was a
/// `w` landing on the x-axis, which forbids an immediate `e`.
pub fn walk_dp_counts(h: usize, l_max: usize) -> Vec<Vec<BigUint>> {
    let width = h + l_max + 1;
    let height = l_max + 1;
    let at = |x: usize, y: usize, flag: bool| (x * height + y) * 2 + flag as usize;
    let mut cur = vec![BigUint::zero(); width * height * 2];
    cur[at(h, 0, false)] = BigUint::from(1u32);
    let mut table = Vec::with_capacity(l_max + 1);
    for l in 0..=l_max {
        table.push((0..width).map(|x| &cur[at(x, 0, false)] + &cur[at(x, 0, true)]).collect());
        if l == l_max {
            break;
        }
        let mut next = vec![BigUint::zero(); cur.len()];
        for x in 0..width {
            for y in 0..height {
                for flag in [false, true] {
                    let c = &cur[at(x, y, flag)];
                    if c.is_zero() {
                        continue;
                    }
                    for s in WalkStep::ALL {
                        if s == WalkStep::E && flag {
                            continue;
                        }
                        let (dx, dy) = s.delta();
                        let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                        if nx < 0 || ny < 0 || nx as usize >= width || ny as usize >= height {
                            continue;
                        }
                        let new_flag = s == WalkStep::W && ny == 0;
                        next[at(nx as usize, ny as usize, new_flag)] += c;
                    }
                }
            }
        }
        cur = next;
    }
    table
}

/// `table[h][s][l]` for `h <= h_max`, `s <= s_max`, `l <= l_max`.
pub fn walk_dp_table(h_max: usize, s_max: usize, l_max: usize) -> Vec<Vec<Vec<BigUint>>> {
    (0..=h_max)
        .map(|h| {
            let by_len = walk_dp_counts(h, l_max);
            (0..=s_max)
                .map(|s| by_len.iter().map(|row| row.get(s).cloned().unwrap_or_default()).collect())
                .collect()
        })
        .collect()
}
