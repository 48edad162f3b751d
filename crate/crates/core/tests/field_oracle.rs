use gqlrc_core::gf::{Elem, Field};
use proptest::prelude::*;

/// Schoolbook product of coefficient vectors reduced by a monic modulus.
fn poly_mul_mod(p: u32, a: &[u32], b: &[u32], modulus: &[u32]) -> Vec<u32> {
    let h = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * h];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (h..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        for (k, &m) in modulus.iter().enumerate() {
            let idx = d - h + k;
            prod[idx] = (prod[idx] + p * p - c * m % p) % p;
        }
    }
    prod.truncate(h);
    prod
}

fn digits(p: u32, h: u32, mut v: u32) -> Vec<u32> {
    (0..h)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

#[test]
fn multiplication_matches_polynomial_arithmetic() {
    for (p, h) in [
        (2, 2),
        (2, 3),
        (2, 4),
        (3, 2),
        (3, 3),
        (5, 2),
        (7, 2),
        (2, 6),
    ] {
        let f = Field::new(p, h).unwrap();
        assert_eq!(f.modulus().len(), h as usize + 1);
        for a in f.elements() {
            for b in f.elements() {
                let expect = poly_mul_mod(
                    p,
                    &digits(p, h, a.value()),
                    &digits(p, h, b.value()),
                    f.modulus(),
                );
                assert_eq!(
                    f.coeffs(f.mul(a, b)),
                    expect,
                    "F_{}: {a:?} * {b:?}",
                    f.order()
                );
                let sum: Vec<u32> = digits(p, h, a.value())
                    .iter()
                    .zip(digits(p, h, b.value()))
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                assert_eq!(f.coeffs(f.add(a, b)), sum);
            }
        }
    }
}

#[test]
fn primitive_element_generates_the_group() {
    for q in [4, 8, 9, 16, 25, 27, 49, 64, 81, 121, 128, 256] {
        let f = Field::with_order(q).unwrap();
        let g = f.primitive_element();
        let mut seen = std::collections::HashSet::new();
        let mut x = Elem::ONE;
        for _ in 0..q - 1 {
            seen.insert(x);
            x = f.mul(x, g);
        }
        assert_eq!(x, Elem::ONE);
        assert_eq!(seen.len() as u32, q - 1, "F_{q}");
    }
}

fn field_and_elems() -> impl Strategy<Value = (u32, u32, u32, u32, u32)> {
    prop_oneof![
        Just((2u32, 8u32)),
        Just((3, 5)),
        Just((7, 2)),
        Just((2, 11)),
        Just((5, 3))
    ]
    .prop_flat_map(|(p, h)| {
        let q = p.pow(h);
        (Just(p), Just(h), 0..q, 0..q, 0..q)
    })
}

proptest! {
    #[test]
    fn field_axioms((p, h, a, b, c) in field_and_elems()) {
        let f = Field::new(p, h).unwrap();
        let (a, b, c) = (Elem(a), Elem(b), Elem(c));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            prop_assert_eq!(f.div(f.mul(b, a), a).unwrap(), b);
        }
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
    }
}
