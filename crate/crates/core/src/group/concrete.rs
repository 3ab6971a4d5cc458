//! Exact enumeration of small groups: element lists with total
//! multiplication, inverses, orders, and generated cyclic subgroups.
//!
//! Element 0 is always the identity, and enumeration order is deterministic
//! per family (rotations before reflections, breadth-first closure for
//! generated permutation groups), so element indices are reproducible.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::arith::{gcd, lcm};

use super::{GroupError, GroupSpec, Permutation};

/// Default ceiling on the number of elements any enumeration may produce.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// One enumerated group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Elem {
    /// Residue in Z_n.
    Residue(u64),
    /// `rot` applications of the rotation, composed with a reflection when `refl`.
    Dihedral { rot: u64, refl: bool },
    /// `x^pow`, composed with `y` when `outer`.
    Dicyclic { pow: u64, outer: bool },
    Perm(Permutation),
    Pair(Box<Elem>, Box<Elem>),
}

/// Family-specific multiplication rules; parameters live here so elements
/// stay plain data.
#[derive(Debug, Clone)]
enum Law {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    Perm,
    Product(Box<Law>, Box<Law>),
}

impl Law {
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Law::Cyclic(n), Elem::Residue(x), Elem::Residue(y)) => Elem::Residue((x + y) % n),
            (Law::Dihedral(n), Elem::Dihedral { rot: i, refl: false }, Elem::Dihedral { rot: j, refl }) => {
                Elem::Dihedral { rot: (i + j) % n, refl: *refl }
            }
            // (a^i b) a^j = a^{i-j} b ; (a^i b)(a^j b) = a^{i-j}
            (Law::Dihedral(n), Elem::Dihedral { rot: i, refl: true }, Elem::Dihedral { rot: j, refl }) => {
                Elem::Dihedral { rot: (i + n - j % n) % n, refl: !refl }
            }
            (Law::Dicyclic(t), Elem::Dicyclic { pow: i, outer: false }, Elem::Dicyclic { pow: j, outer }) => {
                Elem::Dicyclic { pow: (i + j) % (2 * t), outer: *outer }
            }
            // (x^i y) x^j = x^{i-j} y ; (x^i y)(x^j y) = x^{i-j+t}
            (Law::Dicyclic(t), Elem::Dicyclic { pow: i, outer: true }, Elem::Dicyclic { pow: j, outer }) => {
                let m = 2 * t;
                let base = (i + m - j % m) % m;
                if *outer {
                    Elem::Dicyclic { pow: (base + t) % m, outer: false }
                } else {
                    Elem::Dicyclic { pow: base, outer: true }
                }
            }
            (Law::Perm, Elem::Perm(p), Elem::Perm(q)) => Elem::Perm(p.compose(q)),
            (Law::Product(ll, lr), Elem::Pair(al, ar), Elem::Pair(bl, br)) => Elem::Pair(
                Box::new(ll.mul(al, bl)),
                Box::new(lr.mul(ar, br)),
            ),
            _ => unreachable!("element does not belong to this group law"),
        }
    }

    fn inv(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Law::Cyclic(n), Elem::Residue(x)) => Elem::Residue((n - x % n) % n),
            (Law::Dihedral(n), Elem::Dihedral { rot, refl: false }) => {
                Elem::Dihedral { rot: (n - rot % n) % n, refl: false }
            }
            // reflections are involutions
            (Law::Dihedral(_), e @ Elem::Dihedral { refl: true, .. }) => e.clone(),
            (Law::Dicyclic(t), Elem::Dicyclic { pow, outer: false }) => {
                Elem::Dicyclic { pow: (2 * t - pow % (2 * t)) % (2 * t), outer: false }
            }
            // (x^i y)^{-1} = x^{i+t} y
            (Law::Dicyclic(t), Elem::Dicyclic { pow, outer: true }) => {
                Elem::Dicyclic { pow: (pow + t) % (2 * t), outer: true }
            }
            (Law::Perm, Elem::Perm(p)) => Elem::Perm(p.inverse()),
            (Law::Product(ll, lr), Elem::Pair(l, r)) => {
                Elem::Pair(Box::new(ll.inv(l)), Box::new(lr.inv(r)))
            }
            _ => unreachable!("element does not belong to this group law"),
        }
    }

    fn order(&self, a: &Elem) -> u64 {
        match (self, a) {
            (Law::Cyclic(n), Elem::Residue(x)) => n / gcd(*n, *x),
            (Law::Dihedral(n), Elem::Dihedral { rot, refl: false }) => n / gcd(*n, *rot),
            (Law::Dihedral(_), Elem::Dihedral { refl: true, .. }) => 2,
            (Law::Dicyclic(t), Elem::Dicyclic { pow, outer: false }) => (2 * t) / gcd(2 * t, *pow),
            (Law::Dicyclic(_), Elem::Dicyclic { outer: true, .. }) => 4,
            (Law::Perm, Elem::Perm(p)) => p.order(),
            (Law::Product(ll, lr), Elem::Pair(l, r)) => lcm(ll.order(l), lr.order(r)),
            _ => unreachable!("element does not belong to this group law"),
        }
    }
}

/// A fully enumerated finite group.
#[derive(Debug, Clone)]
pub struct ConcreteGroup {
    law: Law,
    elements: Vec<Elem>,
    index: HashMap<Elem, usize>,
    orders: Vec<u64>,
}

impl ConcreteGroup {
    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The identity sits at index 0.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let product = self.law.mul(&self.elements[a], &self.elements[b]);
        self.index[&product]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.law.inv(&self.elements[a])]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    /// Indices of the cyclic subgroup generated by `a`, ascending.
    pub fn cyclic_subgroup(&self, a: usize) -> BTreeSet<usize> {
        let mut members = BTreeSet::from([0]);
        let mut at = a;
        while at != 0 {
            members.insert(at);
            at = self.multiply(at, a);
        }
        members
    }

    /// Count of elements of order exactly 2.
    pub fn involution_count(&self) -> usize {
        self.orders.iter().filter(|&&o| o == 2).count()
    }
}

pub(super) fn enumerate(spec: &GroupSpec, cap: usize) -> Result<ConcreteGroup, GroupError> {
    spec.validate()?;
    let (law, elements) = match spec {
        GroupSpec::Cyclic(n) => {
            check_cap(*n as usize, cap)?;
            (Law::Cyclic(*n), (0..*n).map(Elem::Residue).collect::<Vec<_>>())
        }
        GroupSpec::Dihedral(n) => {
            check_cap(2 * *n as usize, cap)?;
            let mut elems: Vec<Elem> =
                (0..*n).map(|rot| Elem::Dihedral { rot, refl: false }).collect();
            elems.extend((0..*n).map(|rot| Elem::Dihedral { rot, refl: true }));
            (Law::Dihedral(*n), elems)
        }
        GroupSpec::Dicyclic(t) => {
            check_cap(4 * *t as usize, cap)?;
            let mut elems: Vec<Elem> =
                (0..2 * *t).map(|pow| Elem::Dicyclic { pow, outer: false }).collect();
            elems.extend((0..2 * *t).map(|pow| Elem::Dicyclic { pow, outer: true }));
            (Law::Dicyclic(*t), elems)
        }
        GroupSpec::Symmetric(n) => {
            let size = checked_factorial(*n, cap)?;
            check_cap(size, cap)?;
            (Law::Perm, all_permutations(*n as usize, false))
        }
        GroupSpec::Alternating(n) => {
            let size = checked_factorial(*n, cap)?.div_ceil(2);
            check_cap(size, cap)?;
            (Law::Perm, all_permutations(*n as usize, true))
        }
        GroupSpec::DirectProduct(left, right) => {
            let lg = enumerate(left, cap)?;
            let rg = enumerate(right, cap)?;
            let size = lg.order().saturating_mul(rg.order());
            check_cap(size, cap)?;
            let mut elems = Vec::with_capacity(size);
            for le in &lg.elements {
                for re in &rg.elements {
                    elems.push(Elem::Pair(Box::new(le.clone()), Box::new(re.clone())));
                }
            }
            (Law::Product(Box::new(lg.law), Box::new(rg.law)), elems)
        }
        GroupSpec::PermGroup { points, generators } => {
            (Law::Perm, closure(*points, generators, cap)?)
        }
        GroupSpec::SpectrumGroup { name, .. } => {
            return Err(GroupError::SpectrumOnly(name.clone()));
        }
    };
    debug_assert_eq!(law.order(&elements[0]), 1, "identity must come first");
    let index: HashMap<Elem, usize> =
        elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
    let orders = elements.iter().map(|e| law.order(e)).collect();
    Ok(ConcreteGroup { law, elements, index, orders })
}

fn check_cap(size: usize, cap: usize) -> Result<(), GroupError> {
    if size > cap {
        return Err(GroupError::ElementCapExceeded { cap });
    }
    Ok(())
}

fn checked_factorial(n: u32, cap: usize) -> Result<usize, GroupError> {
    let mut acc = 1usize;
    for k in 1..=n as usize {
        acc = acc.checked_mul(k).ok_or(GroupError::ElementCapExceeded { cap })?;
        if acc > 2 * cap {
            return Err(GroupError::ElementCapExceeded { cap });
        }
    }
    Ok(acc)
}

/// All (even) permutations of `k` points in lexicographic image order, so the
/// identity is first.
fn all_permutations(k: usize, even_only: bool) -> Vec<Elem> {
    let mut images: Vec<u32> = (0..k as u32).collect();
    let mut out = Vec::new();
    loop {
        let perm = Permutation::from_images(images.clone()).expect("generated in place");
        if !even_only || perm.is_even() {
            out.push(Elem::Perm(perm));
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    out
}

fn next_permutation(arr: &mut [u32]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// Breadth-first saturation from the identity: pop an element, append every
/// unseen right-product with a generator. Insertion order is the element
/// order, so indices are stable for a fixed generator list.
fn closure(points: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Elem>, GroupError> {
    let identity = Permutation::identity(points);
    let mut seen: HashMap<Permutation, usize> = HashMap::new();
    let mut order = vec![identity.clone()];
    seen.insert(identity.clone(), 0);
    let mut queue = VecDeque::from([identity]);
    while let Some(current) = queue.pop_front() {
        for generator in generators {
            let product = current.compose(generator);
            if !seen.contains_key(&product) {
                if order.len() >= cap {
                    return Err(GroupError::ElementCapExceeded { cap });
                }
                seen.insert(product.clone(), order.len());
                order.push(product.clone());
                queue.push_back(product);
            }
        }
    }
    Ok(order.into_iter().map(Elem::Perm).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate_str(text: &str) -> ConcreteGroup {
        text.parse::<GroupSpec>().unwrap().enumerate().unwrap()
    }

    fn check_group_axioms(g: &ConcreteGroup) {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.multiply(0, a), a);
            assert_eq!(g.multiply(a, 0), a);
            assert_eq!(g.multiply(a, g.inverse(a)), 0);
            // the analytic order matches the multiplicative one
            let mut power = a;
            let mut steps = 1u64;
            while power != 0 {
                power = g.multiply(power, a);
                steps += 1;
            }
            assert_eq!(steps, g.element_order(a));
        }
        // associativity spot checks on every triple for small groups
        if n <= 24 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(
                            g.multiply(g.multiply(a, b), c),
                            g.multiply(a, g.multiply(b, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_group() {
        let g = enumerate_str("Z 1");
        assert_eq!(g.order(), 1);
        assert_eq!(g.element_order(0), 1);
    }

    #[test]
    fn dihedral_3_structure() {
        let g = enumerate_str("D 6");
        assert_eq!(g.order(), 6);
        assert_eq!(g.involution_count(), 3);
        assert_eq!((0..6).filter(|&i| g.element_order(i) == 3).count(), 2);
        check_group_axioms(&g);
    }

    #[test]
    fn dicyclic_q8_and_q12() {
        let q8 = enumerate_str("Q 8");
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.involution_count(), 1);
        assert_eq!((0..8).filter(|&i| q8.element_order(i) == 4).count(), 6);
        check_group_axioms(&q8);

        let q12 = enumerate_str("Q 12");
        assert_eq!(q12.order(), 12);
        assert_eq!(q12.involution_count(), 1);
        check_group_axioms(&q12);
    }

    #[test]
    fn symmetric_and_alternating() {
        let s4 = enumerate_str("S 4");
        assert_eq!(s4.order(), 24);
        check_group_axioms(&s4);
        let a4 = enumerate_str("A 4");
        assert_eq!(a4.order(), 12);
        assert!((0..12).all(|i| a4.element_order(i) != 4));
        check_group_axioms(&a4);
    }

    #[test]
    fn perm_group_closure_is_s3() {
        let g = enumerate_str("PERM 3 ; (1 2) ; (1 2 3)");
        assert_eq!(g.order(), 6);
        check_group_axioms(&g);
    }

    #[test]
    fn direct_product_orders() {
        let g = enumerate_str("DP (Z 2) (Z 3)");
        assert_eq!(g.order(), 6);
        assert_eq!((0..6).map(|i| g.element_order(i)).max(), Some(6));
        check_group_axioms(&g);
    }

    #[test]
    fn cyclic_subgroups_of_z4() {
        let g = enumerate_str("Z 4");
        // <a^2> = {e, a^2} sits strictly inside <a>
        let sub2 = g.cyclic_subgroup(2);
        let sub1 = g.cyclic_subgroup(1);
        assert_eq!(sub2.len(), 2);
        assert_eq!(sub1.len(), 4);
        assert!(sub2.is_subset(&sub1));
        assert_eq!(g.cyclic_subgroup(3), sub1);
    }

    #[test]
    fn caps_and_spectrum_groups() {
        let spec: GroupSpec = "S 9".parse().unwrap();
        assert!(matches!(spec.enumerate(), Err(GroupError::ElementCapExceeded { .. })));
        assert!(spec.enumerate_with_cap(400_000).is_ok());

        let spectral: GroupSpec = "SPEC X : 2,3".parse().unwrap();
        assert!(matches!(spectral.enumerate(), Err(GroupError::SpectrumOnly(_))));
    }

    #[test]
    fn enumerated_orders_match_spectrum() {
        for text in ["Z 12", "D 12", "Q 16", "S 5", "A 5", "DP (Z 4) (S 3)"] {
            let spec: GroupSpec = text.parse().unwrap();
            let group = spec.enumerate().unwrap();
            let spectrum = spec.order_spectrum().unwrap();
            let mut observed = std::collections::BTreeMap::new();
            for i in 0..group.order() {
                *observed.entry(group.element_order(i)).or_insert(0u64) += 1;
            }
            assert_eq!(spectrum.counts().unwrap(), &observed, "{text}");
        }
    }
}
