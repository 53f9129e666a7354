//! Depth-first enumeration of nonintersecting path families.
//!
//! Paths `P_1..P_a` are built in order, east steps before south steps, on a
//! `u128` occupancy mask. Once they are placed, the completions of the
//! exceptional path `P_{a+1}` are counted by dynamic programming instead of
//! being listed, which is also what [`nth_family`] uses to unrank.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{start_end_points, LatticePath, LatticePoint, PathFamily, PuncturedHexagon, Step};
use crate::error::{Error, Result};
use crate::ExactInt;

/// Largest sides accepted by the enumerator: `a <= 4`, `b, c <= 6`.
pub const ENUMERATION_GUARD: (usize, usize, usize) = (4, 6, 6);

struct Grid {
    a: i64,
    b: i64,
    c: i64,
    width: i64,
    starts: Vec<LatticePoint>,
    puncture: LatticePoint,
}

impl Grid {
    fn new(h: &PuncturedHexagon) -> Result<Self> {
        let (ga, gb, gc) = ENUMERATION_GUARD;
        if h.a() > ga || h.b() > gb || h.c() > gc {
            return Err(Error::SizeGuard(format!(
                "enumeration needs a <= {ga}, b <= {gb}, c <= {gc}, got ({},{},{})",
                h.a(),
                h.b(),
                h.c()
            )));
        }
        let (mut starts, _) = start_end_points(h);
        let puncture = starts.pop().expect("a+1 start points");
        Ok(Grid {
            a: h.a() as i64,
            b: h.b() as i64,
            c: h.c() as i64,
            width: (h.a() + h.b() + 1) as i64,
            starts,
            puncture,
        })
    }

    fn bit(&self, p: LatticePoint) -> u128 {
        1u128 << (p.y * self.width + p.x)
    }

    /// Start points and puncture, which no ordinary path may run through.
    fn reserved(&self) -> u128 {
        self.starts.iter().fold(self.bit(self.puncture), |m, &p| m | self.bit(p))
    }

    fn is_end(&self, p: LatticePoint) -> bool {
        p.x - p.y == self.b
    }

    fn moves(&self, p: LatticePoint) -> [Option<(Step, LatticePoint)>; 2] {
        let east = (p.x < self.a + self.b).then(|| (Step::East, p.step(Step::East)));
        let south = (p.y > 0).then(|| (Step::South, p.step(Step::South)));
        [east, south]
    }

    /// Every free path from `p` to the right boundary, reported with the
    /// occupancy including it.
    fn walk(
        &self,
        p: LatticePoint,
        occ: u128,
        steps: &mut Vec<Step>,
        done: &mut dyn FnMut(&[Step], u128) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.is_end(p) {
            return done(steps, occ);
        }
        for (s, q) in self.moves(p).into_iter().flatten() {
            let bit = self.bit(q);
            if occ & bit != 0 {
                continue;
            }
            steps.push(s);
            let r = self.walk(q, occ | bit, steps, done);
            steps.pop();
            r?;
        }
        ControlFlow::Continue(())
    }

    /// Places paths `i..a` after `paths`, calling `leaf` once all `a` ordinary
    /// paths are down.
    fn families(
        &self,
        i: usize,
        paths: &mut Vec<LatticePath>,
        occ: u128,
        leaf: &mut dyn FnMut(&[LatticePath], u128) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == self.starts.len() {
            return leaf(paths, occ);
        }
        let start = self.starts[i];
        self.walk(start, occ, &mut Vec::new(), &mut |steps, occ2| {
            paths.push(LatticePath { start, steps: steps.to_vec() });
            let r = self.families(i + 1, paths, occ2, leaf);
            paths.pop();
            r
        })
    }

    fn index(&self, p: LatticePoint) -> usize {
        (p.y * self.width + p.x) as usize
    }

    /// For every point on or right of the puncture's diagonal, the number of
    /// free paths from it to the right boundary.
    fn completions(&self, occ: u128) -> [u64; 128] {
        let height = self.a + self.c + 1;
        let mut dp = [0u64; 128];
        // successors lie one diagonal further right, so sweep diagonals downwards
        for d in (self.puncture.x - self.puncture.y..=self.b).rev() {
            for y in (-d).max(0)..height.min(self.width - d) {
                let p = LatticePoint::new(y + d, y);
                dp[self.index(p)] = if d == self.b {
                    1
                } else {
                    let mut total = 0;
                    for (_, q) in self.moves(p).into_iter().flatten() {
                        if occ & self.bit(q) == 0 {
                            total += dp[self.index(q)];
                        }
                    }
                    total
                };
            }
        }
        dp
    }

    /// Number of ways to finish the family once paths before `i` are placed
    /// and path `i` has reached `p`.
    fn count_from(&self, i: usize, p: LatticePoint, occ: u128) -> u128 {
        if self.is_end(p) {
            return match self.starts.get(i + 1) {
                Some(&next) => self.count_from(i + 1, next, occ),
                None => self.count_last(occ) as u128,
            };
        }
        let mut total = 0;
        for (_, q) in self.moves(p).into_iter().flatten() {
            let bit = self.bit(q);
            if occ & bit == 0 {
                total += self.count_from(i, q, occ | bit);
            }
        }
        total
    }

    fn count_last(&self, occ: u128) -> u64 {
        self.completions(occ)[self.index(self.puncture)]
    }

    fn unrank_last(&self, occ: u128, mut index: u64) -> LatticePath {
        let dp = self.completions(occ);
        let at = |p: LatticePoint| dp[self.index(p)];
        let mut p = self.puncture;
        let mut steps = Vec::new();
        while !self.is_end(p) {
            let mut moved = false;
            for (s, q) in self.moves(p).into_iter().flatten() {
                if occ & self.bit(q) != 0 {
                    continue;
                }
                let n = at(q);
                if index < n {
                    steps.push(s);
                    p = q;
                    moved = true;
                    break;
                }
                index -= n;
            }
            assert!(moved, "index within the completion count");
        }
        LatticePath { start: self.puncture, steps }
    }
}

/// Number of rhombus tilings of `h`, by exhaustive enumeration of path families.
/// The first path is fanned out across worker threads.
pub fn enumerate_tilings(h: &PuncturedHexagon) -> Result<ExactInt> {
    let grid = Grid::new(h)?;
    let mut firsts = Vec::new();
    let start = grid.starts[0];
    let _ = grid.walk(start, grid.reserved(), &mut Vec::new(), &mut |_, occ| {
        firsts.push(occ);
        ControlFlow::Continue(())
    });
    let total: u128 = firsts
        .par_iter()
        .map(|&occ| match grid.starts.get(1) {
            Some(&next) => grid.count_from(1, next, occ),
            None => grid.count_last(occ) as u128,
        })
        .sum();
    Ok(BigInt::from(total))
}

/// The family with the given position in enumeration order.
pub fn nth_family(h: &PuncturedHexagon, index: u128) -> Result<PathFamily> {
    let grid = Grid::new(h)?;
    let mut remaining = index;
    let mut found = None;
    let _ = grid.families(0, &mut Vec::new(), grid.reserved(), &mut |paths, occ| {
        let n = grid.count_last(occ) as u128;
        if remaining < n {
            let mut all = paths.to_vec();
            all.push(grid.unrank_last(occ, remaining as u64));
            found = Some(PathFamily { paths: all });
            return ControlFlow::Break(());
        }
        remaining -= n;
        ControlFlow::Continue(())
    });
    found.ok_or_else(|| {
        Error::Precondition(format!("tiling index {index} exceeds the number of tilings of {h}"))
    })
}

/// Calls `f` on every family in enumeration order.
pub fn for_each_family(h: &PuncturedHexagon, mut f: impl FnMut(&PathFamily)) -> Result<()> {
    let grid = Grid::new(h)?;
    let _ = grid.families(0, &mut Vec::new(), grid.reserved(), &mut |paths, occ| {
        grid.walk(grid.puncture, occ, &mut Vec::new(), &mut |steps, _| {
            let mut all = paths.to_vec();
            all.push(LatticePath { start: grid.puncture, steps: steps.to_vec() });
            f(&PathFamily { paths: all });
            ControlFlow::Continue(())
        })
    });
    Ok(())
}
