//! Enumeration of section classes on the plane blown up in nine points.

/// A curve class `d H - sum a_i E_i` meeting the fibre class
/// `F = 3H - sum E_i` once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SectionClass {
    pub d: i64,
    pub a: [i64; 9],
}

impl SectionClass {
    /// Self-intersection `d^2 - sum a_i^2`.
    pub fn self_intersection(&self) -> i64 {
        self.d * self.d - self.a.iter().map(|x| x * x).sum::<i64>()
    }

    /// Intersection with the fibre class, `3d - sum a_i`.
    pub fn fibre_degree(&self) -> i64 {
        3 * self.d - self.a.iter().sum::<i64>()
    }

    /// Arithmetic genus `1 + ([C].[C] - [C].[F]) / 2`.
    pub fn arithmetic_genus(&self) -> i64 {
        1 + (self.self_intersection() - self.fibre_degree()) / 2
    }
}

fn isqrt_ceil(d: i64) -> i64 {
    let mut r = 0;
    while r * r < d {
        r += 1;
    }
    r
}

/// Enumerates the classes with `3d - sum a_i = 1`, `sum a_i^2 <= 3 + d^2` and
/// nonnegative arithmetic genus, searching each coordinate inside the window
/// `|a_i - (3d - 1)/9| <= sqrt(d) + 2 + slack`.
pub fn goldilocks_zone_windowed(d: i64, slack: i64) -> Vec<SectionClass> {
    assert!(d >= 0, "degree must be nonnegative");
    let target_sum = 3 * d - 1;
    let cap_sq = 3 + d * d;
    // window around the rational centre (3d - 1) / 9
    let width9 = 9 * (isqrt_ceil(d) + 2 + slack);
    let lo = (target_sum - width9).div_euclid(9);
    let hi = (target_sum + width9 + 8).div_euclid(9);
    let mut out = Vec::new();
    let mut a = [0i64; 9];
    fn recurse(
        a: &mut [i64; 9],
        idx: usize,
        sum: i64,
        sum_sq: i64,
        lo: i64,
        hi: i64,
        target_sum: i64,
        cap_sq: i64,
        d: i64,
        out: &mut Vec<SectionClass>,
    ) {
        if idx == 9 {
            if sum == target_sum && sum_sq <= cap_sq {
                let class = SectionClass { d, a: *a };
                if class.arithmetic_genus() >= 0 {
                    out.push(class);
                }
            }
            return;
        }
        let remaining = (9 - idx - 1) as i64;
        for v in lo..=hi {
            let s = sum + v;
            if s + remaining * lo > target_sum || s + remaining * hi < target_sum {
                continue;
            }
            let sq = sum_sq + v * v;
            if sq > cap_sq {
                continue;
            }
            a[idx] = v;
            recurse(a, idx + 1, s, sq, lo, hi, target_sum, cap_sq, d, out);
        }
        a[idx] = 0;
    }
    recurse(
        &mut a, 0, 0, 0, lo, hi, target_sum, cap_sq, d, &mut out,
    );
    out.sort();
    out
}

/// The search zone with the standard window slack of one.
pub fn goldilocks_zone(d: i64) -> Vec<SectionClass> {
    goldilocks_zone_windowed(d, 1)
}
