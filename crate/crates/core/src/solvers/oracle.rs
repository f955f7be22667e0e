//! Exhaustive subset enumeration, independent of the branch-and-bound code.
//! Used only to cross-check the exact searches on small instances.

use crate::error::{Error, Result};
use crate::system::LinearSystem;

pub const MAX_ORACLE_SIZE: usize = 20;

/// All `k`-subsets of `0..n` as bitmasks, in increasing numeric order.
fn subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1 << n;
    let first: u64 = if k == 0 { 0 } else { (1 << k) - 1 };
    let mut cur = Some(first).filter(|&c| c < limit || (k == 0));
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            // Gosper's hack
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let next = (((ripple ^ c) >> 2) / low) | ripple;
            Some(next).filter(|&x| x < limit)
        };
        Some(c as u32)
    })
}

fn masks(s: &LinearSystem) -> Vec<u32> {
    s.lines()
        .iter()
        .map(|l| l.iter().fold(0u32, |m, &p| m | (1 << p)))
        .collect()
}

/// Size of the smallest point set meeting every line.
pub fn brute_force_tau(s: &LinearSystem) -> Result<usize> {
    if s.num_points() > MAX_ORACLE_SIZE {
        return Err(Error::TooLarge {
            what: "points",
            size: s.num_points(),
            cap: MAX_ORACLE_SIZE,
        });
    }
    let lines = masks(s);
    for k in 0..=s.num_points() {
        if subsets(s.num_points(), k).any(|set| lines.iter().all(|&l| l & set != 0)) {
            return Ok(k);
        }
    }
    unreachable!("the full point set meets every nonempty line")
}

/// Size of the largest line set with no point on three of its lines.
pub fn brute_force_nu2(s: &LinearSystem) -> Result<usize> {
    if s.num_lines() > MAX_ORACLE_SIZE {
        return Err(Error::TooLarge {
            what: "lines",
            size: s.num_lines(),
            cap: MAX_ORACLE_SIZE,
        });
    }
    let lines = masks(s);
    for k in (0..=s.num_lines()).rev() {
        let found = subsets(s.num_lines(), k).any(|set| {
            let (mut once, mut twice) = (0u32, 0u32);
            for (i, &l) in lines.iter().enumerate() {
                if set & (1 << i) != 0 {
                    if twice & l != 0 {
                        return false;
                    }
                    twice |= once & l;
                    once |= l;
                }
            }
            true
        });
        if found {
            return Ok(k);
        }
    }
    unreachable!("the empty set is a 2-packing")
}
