use super::greedy_bound;
use crate::graph::FamilySpec;

/// Published sum choice number of a family member, if one is known.
///
/// Families known to be sc-greedy report their greedy bound.
pub fn closed_form(spec: &FamilySpec) -> Option<u32> {
    use FamilySpec::*;
    let gb = greedy_bound(&spec.generate().ok()?);
    match spec {
        Path(_) | Cycle(_) | Complete(_) | PathOfCycles(_) | TreeOfCycles { .. } => Some(gb),
        CompleteBipartite(a, b) => {
            let (small, n) = ((*a).min(*b) as u32, (*a).max(*b) as u32);
            match small {
                0 | 1 => Some(gb),
                2 => Some(2 * n + 1 + isqrt(4 * n + 1)),
                3 => Some(2 * n + 1 + isqrt(12 * n + 4)),
                _ => None,
            }
        }
        Theta(a, b, c) => {
            let mut k = [*a, *b, *c];
            k.sort_unstable();
            match k {
                [1, 1, odd] if odd % 2 == 1 => Some(4 * (odd as u32 - 1) / 2 + 10),
                _ => Some(gb),
            }
        }
        Wheel(3) => Some(gb),
        Wheel(4) => Some(12),
        BrokenWheel(k) if *k <= 9 => Some(gb),
        Power(base, 2) if matches!(**base, Path(_)) => Some(gb),
        CartesianProduct(g, h) => product_value(g, h, gb).or_else(|| product_value(h, g, gb)),
        _ => None,
    }
}

fn product_value(g: &FamilySpec, h: &FamilySpec, gb: u32) -> Option<u32> {
    use FamilySpec::*;
    match (g, h) {
        (Path(2) | Complete(2), Path(_)) => Some(gb),
        (Path(3), Path(n)) => {
            let n = *n as u32;
            Some(8 * n - 3 - n / 3)
        }
        (Path(2) | Complete(2), Complete(n)) => {
            let n = *n as u32;
            Some(n * n + (5 * n).div_ceil(3))
        }
        (Complete(3), Complete(3)) => Some(25),
        _ => None,
    }
}

fn isqrt(x: u32) -> u32 {
    let mut r = (x as f64).sqrt() as u32;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(text: &str) -> Option<u32> {
        closed_form(&text.parse().unwrap())
    }

    #[test]
    fn table_values() {
        assert_eq!(value("bipartite:2,4"), Some(13));
        assert_eq!(value("bipartite:4,2"), Some(13));
        assert_eq!([1, 2, 3, 4].map(|n| value(&format!("bipartite:2,{n}"))), [Some(5), Some(8), Some(10), Some(13)]);
        assert_eq!(value("bipartite:3,3"), Some(13));
        assert_eq!(value("bipartite:3,2"), Some(10));
        assert_eq!(value("product:complete:2,complete:3"), Some(14));
        assert_eq!(value("product:complete:3,complete:3"), Some(25));
        assert_eq!(value("product:path:3,path:3"), Some(20));
        assert_eq!(value("product:path:2,path:3"), Some(13));
        assert_eq!(value("theta:1,1,3"), Some(14));
        assert_eq!(value("theta:1,1,1"), Some(10));
        assert_eq!(value("theta:1,1,2"), Some(13));
        assert_eq!(value("theta:0,1,2"), Some(11));
        assert_eq!(value("pathcycles:4,5,4"), Some(20));
        assert_eq!(value("wheel:4"), Some(12));
        assert_eq!(value("wheel:5"), None);
        assert_eq!(value("brokenwheel:3"), Some(9));
        assert_eq!(value("brokenwheel:10"), None);
        assert_eq!(value("power:path:5,2"), Some(12));
        assert_eq!(value("gtheta:1,1,1,1"), None);
    }

    #[test]
    fn overlapping_formulas_agree() {
        // P3 x P2 is both a ladder and a row of the P3 x Pn formula
        assert_eq!(product_value(&FamilySpec::Path(3), &FamilySpec::Path(2), 13), Some(13));
        // K2 x K2 is the 4-cycle
        assert_eq!(value("product:complete:2,complete:2"), value("cycle:4"));
        // K_{2,1} and K_{3,1} are stars
        assert_eq!(value("bipartite:2,1"), value("path:3"));
        assert_eq!(value("bipartite:3,1"), Some(7));
        for n in 1..200 {
            assert_eq!(isqrt(n * n), n);
            assert_eq!(isqrt(n * n - 1), n - 1);
        }
    }
}
