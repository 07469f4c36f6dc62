use dashu::integer::IBig;
use dashu::rational::RBig;

use super::{LatticeMeta, SeriesKind, SeriesTable, SignConvention};

fn binomial(n: usize, k: usize) -> IBig {
    let k = k.min(n - k);
    (0..k).fold(IBig::ONE, |acc, i| acc * IBig::from(n - i) / IBig::from(i + 1))
}

/// The exact one-dimensional series:
/// `b(n) = (-1)^(n+1) (1/n) (2n-1)! / ((n-1)! n!)`, with `b(1) = 1`.
///
/// Consecutive ratios satisfy `b(n)/b(n-1) = -(4 - 6/n + 2/n^2)` exactly.
///
/// # Panics
/// If `nmax` is zero.
pub fn gen_rect_d1(nmax: usize) -> SeriesTable {
    assert!(nmax >= 1, "nmax must be at least 1");
    let values = (1..=nmax)
        .map(|n| {
            // (2n-1)!/((n-1)! n!) = C(2n-1, n)
            let magnitude = RBig::from_parts(binomial(2 * n - 1, n), n.into());
            if n % 2 == 1 {
                magnitude
            } else {
                -magnitude
            }
        })
        .collect();
    let meta = LatticeMeta {
        name: "rect-d1".into(),
        d: Some(RBig::ONE),
        kind: SeriesKind::MayerB,
    };
    SeriesTable::new(1, values, SignConvention::Alternating, meta).expect("valid by construction")
}

/// Integer partitions `p(1)..p(nmax)` via Euler's pentagonal-number recurrence.
///
/// # Panics
/// If `nmax` is zero.
pub fn gen_partitions(nmax: usize) -> SeriesTable {
    assert!(nmax >= 1, "nmax must be at least 1");
    let mut p = vec![IBig::ZERO; nmax + 1];
    p[0] = IBig::ONE;
    for n in 1..=nmax {
        let mut acc = IBig::ZERO;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    let values = p.into_iter().skip(1).map(RBig::from).collect();
    let meta = LatticeMeta {
        name: "partitions".into(),
        d: None,
        kind: SeriesKind::Partitions,
    };
    SeriesTable::new(1, values, SignConvention::AllPositive, meta).expect("valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: u64) -> RBig {
        RBig::from_parts(n.into(), d.into())
    }

    #[test]
    fn d1_leading_terms() {
        let t = gen_rect_d1(4);
        assert_eq!(t.get(1), Some(&q(1, 1)));
        assert_eq!(t.get(2), Some(&q(-3, 2)));
        assert_eq!(t.get(3), Some(&q(10, 3)));
        assert_eq!(t.get(4), Some(&q(-35, 4)));
    }

    #[test]
    fn d1_ratio_identity() {
        let t = gen_rect_d1(40);
        for n in 2..=40usize {
            let n_r = RBig::from(n);
            let expected = -(RBig::from(4) - RBig::from(6) / &n_r + RBig::from(2) / (&n_r * &n_r));
            assert_eq!(t.get(n).unwrap() / t.get(n - 1).unwrap(), expected, "n={n}");
        }
    }

    #[test]
    fn partition_values() {
        let t = gen_partitions(20);
        assert_eq!(t.get(1), Some(&RBig::ONE));
        assert_eq!(t.get(5), Some(&RBig::from(7)));
        assert_eq!(t.get(20), Some(&RBig::from(627)));
    }
}
