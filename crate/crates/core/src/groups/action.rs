use std::collections::{HashMap, VecDeque};

use num_integer::Integer;

use super::perm::Permutation;
use super::GroupError;
use crate::exactpoly::EvaluationSpec;

/// Canonical encoding of a carrier element. Words are value vectors,
/// multisets sorted index vectors, matrices row-major entries.
pub type Encoding = Vec<u32>;

/// `C_1 x ... x C_m`, one cyclic factor per entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupSpec {
    orders: Vec<u64>,
    labels: Vec<String>,
}

impl AbelianGroupSpec {
    /// Generators are labelled `g1, g2, ...`.
    pub fn new(orders: Vec<u64>) -> Result<Self, GroupError> {
        let labels = (1..=orders.len()).map(|i| format!("g{i}")).collect();
        Self::with_labels(orders, labels)
    }

    pub fn with_labels(orders: Vec<u64>, labels: Vec<String>) -> Result<Self, GroupError> {
        if orders.contains(&0) {
            return Err(GroupError::ZeroOrder);
        }
        if labels.len() != orders.len() {
            return Err(GroupError::Arity { expected: orders.len(), got: labels.len() });
        }
        Ok(AbelianGroupSpec { orders, labels })
    }

    pub fn trivial() -> Self {
        AbelianGroupSpec { orders: Vec::new(), labels: Vec::new() }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_factors(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// `lcm(N_i)`, the conductor of every character value.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |a, &n| a.lcm(&n))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.orders.len()])
    }

    /// Reduces an exponent vector into canonical residues.
    pub fn element(&self, exps: &[i64]) -> Result<GroupElement, GroupError> {
        if exps.len() != self.orders.len() {
            return Err(GroupError::Arity { expected: self.orders.len(), got: exps.len() });
        }
        Ok(GroupElement(
            exps.iter().zip(&self.orders).map(|(&a, &n)| a.rem_euclid(n as i64) as u64).collect(),
        ))
    }

    /// All elements, lexicographic in the exponent vector.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![GroupElement(Vec::new())];
        for &n in &self.orders {
            out = out
                .into_iter()
                .flat_map(|g| {
                    (0..n).map(move |a| {
                        let mut v = g.0.clone();
                        v.push(a);
                        GroupElement(v)
                    })
                })
                .collect();
        }
        out
    }

    pub fn compose(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement(
            g.0.iter().zip(&h.0).zip(&self.orders).map(|((a, b), n)| (a + b) % n).collect(),
        )
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        GroupElement(g.0.iter().zip(&self.orders).map(|(a, n)| (n - a) % n).collect())
    }

    /// Evaluation point of `g` under embeddings `generator_i -> zeta_{N_i}^{e_i}`.
    pub fn evaluation_spec(&self, g: &GroupElement, embedding: &[u64]) -> EvaluationSpec {
        EvaluationSpec::new(
            self.orders
                .iter()
                .zip(embedding)
                .zip(&g.0)
                .map(|((&n, &e), &a)| (n, (e * a) % n))
                .collect(),
        )
    }

    /// Exponent of `zeta_N`, `N = lcm(N_i)`, in the value of the degree-one
    /// character `omega^d` at `g`.
    pub fn character_exponent(&self, d: &[u64], g: &GroupElement, embedding: &[u64]) -> u64 {
        let n = self.exponent();
        let mut k: u128 = 0;
        for (((&ni, &di), &ai), &ei) in self.orders.iter().zip(d).zip(&g.0).zip(embedding) {
            k += ((n / ni) as u128) * (di as u128) * (ai as u128) * (ei as u128);
        }
        (k % n as u128) as u64
    }
}

/// `g_1^{a_1} ... g_m^{a_m}` with `0 <= a_i < N_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<u64>);

impl GroupElement {
    pub fn exponents(&self) -> &[u64] {
        &self.0
    }
}

/// Kernel of the degree-one character `omega^d` under the default embeddings
/// (every generator to `zeta_{N_i}`).
pub fn character_kernel(group: &AbelianGroupSpec, d: &[u64]) -> Vec<GroupElement> {
    character_kernel_embedded(group, d, &vec![1; group.num_factors()])
}

pub fn character_kernel_embedded(
    group: &AbelianGroupSpec,
    d: &[u64],
    embedding: &[u64],
) -> Vec<GroupElement> {
    group
        .elements()
        .into_iter()
        .filter(|g| group.character_exponent(d, g, embedding) == 0)
        .collect()
}

/// One orbit: sorted member indices and the member with minimal encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub members: Vec<usize>,
    pub representative: usize,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// A permutation action of an explicit product of cyclic groups on a finite,
/// canonically encoded carrier.
#[derive(Clone, Debug)]
pub struct AbelianAction {
    group: AbelianGroupSpec,
    elements: Vec<Encoding>,
    index: HashMap<Encoding, usize>,
    generators: Vec<Permutation>,
}

impl AbelianAction {
    /// Checks that there is one bijection per factor, that generator `i`
    /// satisfies `g_i^{N_i} = 1`, and that the generators commute.
    pub fn new(
        group: AbelianGroupSpec,
        elements: Vec<Encoding>,
        generators: Vec<Permutation>,
    ) -> Result<Self, GroupError> {
        if generators.len() != group.num_factors() {
            return Err(GroupError::Arity { expected: group.num_factors(), got: generators.len() });
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(GroupError::DuplicateElement(e.clone()));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if g.degree() != elements.len() {
                return Err(GroupError::Arity { expected: elements.len(), got: g.degree() });
            }
            let n = group.orders()[i];
            if !n.is_multiple_of(g.order()) {
                return Err(GroupError::OrderViolation { factor: i, order: n, actual: g.order() });
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if generators[i].compose(&generators[j]) != generators[j].compose(&generators[i]) {
                    return Err(GroupError::NotCommuting(i, j));
                }
            }
        }
        Ok(AbelianAction { group, elements, index, generators })
    }

    /// Builds generator maps from a rule giving the image encoding of an
    /// element under generator `factor`.
    pub fn from_rule<F>(group: AbelianGroupSpec, elements: Vec<Encoding>, rule: F) -> Result<Self, GroupError>
    where
        F: Fn(usize, &Encoding) -> Encoding,
    {
        let index: HashMap<&Encoding, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut generators = Vec::with_capacity(group.num_factors());
        for f in 0..group.num_factors() {
            let mut images = Vec::with_capacity(elements.len());
            for e in &elements {
                let img = rule(f, e);
                match index.get(&img) {
                    Some(&j) => images.push(j),
                    None => return Err(GroupError::NotClosed(img)),
                }
            }
            generators.push(Permutation::from_images(images)?);
        }
        drop(index);
        Self::new(group, elements, generators)
    }

    /// A single cyclic group generated by `perm` acting on `{1..n}` (encoded
    /// as the one-letter words `[1]..[n]`); the factor order is the order of
    /// `perm`.
    pub fn cyclic_on_points(perm: &Permutation) -> Result<Self, GroupError> {
        let group = AbelianGroupSpec::new(vec![perm.order()])?;
        let elements = (1..=perm.degree() as u32).map(|i| vec![i]).collect();
        Self::new(group, elements, vec![perm.clone()])
    }

    pub fn group(&self) -> &AbelianGroupSpec {
        &self.group
    }

    pub fn elements(&self) -> &[Encoding] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn act(&self, g: &GroupElement, x: usize) -> usize {
        let mut y = x;
        for (gen, &a) in self.generators.iter().zip(&g.0) {
            for _ in 0..a {
                y = gen.apply(y);
            }
        }
        y
    }

    /// The permutation of carrier indices induced by `g`.
    pub fn permutation_of(&self, g: &GroupElement) -> Permutation {
        let mut p = Permutation::identity(self.len());
        for (gen, &a) in self.generators.iter().zip(&g.0) {
            p = gen.pow(a).compose(&p);
        }
        p
    }

    pub fn fixed_point_count(&self, g: &GroupElement) -> usize {
        let p = self.permutation_of(g);
        (0..self.len()).filter(|&x| p.apply(x) == x).count()
    }

    /// Orbits ordered by the encoding of their minimal representative.
    pub fn orbits(&self) -> Vec<Orbit> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            let representative = *members
                .iter()
                .min_by(|&&a, &&b| self.elements[a].cmp(&self.elements[b]))
                .expect("orbit is nonempty");
            out.push(Orbit { members, representative });
        }
        out.sort_by(|a, b| self.elements[a.representative].cmp(&self.elements[b.representative]));
        out
    }

    pub fn pointwise_stabilizer(&self, x: usize) -> Vec<GroupElement> {
        self.group.elements().into_iter().filter(|g| self.act(g, x) == x).collect()
    }

    /// For a single cyclic factor: all orbits of equal size, or exactly one
    /// singleton orbit and the rest of equal size.
    pub fn is_nearly_free(&self) -> Result<bool, GroupError> {
        if self.group.num_factors() != 1 {
            return Err(GroupError::NotCyclic(self.group.num_factors()));
        }
        Ok(sizes_nearly_free(self.orbits().iter().map(|o| o.len()).collect()))
    }
}

fn sizes_nearly_free(mut sizes: Vec<usize>) -> bool {
    if sizes.windows(2).all(|w| w[0] == w[1]) {
        return true;
    }
    let singles = sizes.iter().filter(|&&s| s == 1).count();
    if singles != 1 {
        return false;
    }
    sizes.retain(|&s| s != 1);
    sizes.windows(2).all(|w| w[0] == w[1])
}

/// Nearly-freeness of `<perm>` acting on its points.
pub fn is_nearly_free_permutation(perm: &Permutation) -> bool {
    sizes_nearly_free(perm.cycles().iter().map(|c| c.len()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words_example() -> AbelianAction {
        let mut elements = Vec::new();
        for a in 1..=3u32 {
            for b in 1..=3u32 {
                elements.push(vec![a, b]);
            }
        }
        let group = AbelianGroupSpec::new(vec![3, 2]).unwrap();
        AbelianAction::from_rule(group, elements, |f, w| match f {
            0 => w.iter().map(|&v| v % 3 + 1).collect(),
            _ => vec![w[1], w[0]],
        })
        .unwrap()
    }

    #[test]
    fn act_examples() {
        let a = words_example();
        let x = a.index_of(&[1, 2]).unwrap();
        let g = a.group().element(&[1, 0]).unwrap();
        assert_eq!(a.elements()[a.act(&g, x)], vec![2, 3]);
        assert_eq!(a.act(&a.group().identity(), x), x);
        let h = a.group().element(&[2, 1]).unwrap();
        assert_eq!(a.act(&a.group().inverse(&h), a.act(&h, x)), x);
    }

    #[test]
    fn words_orbits_and_stabilizers() {
        let a = words_example();
        let sizes: Vec<usize> = a.orbits().iter().map(|o| o.len()).collect();
        assert_eq!(sizes, vec![3, 6]);
        let x = a.index_of(&[1, 1]).unwrap();
        let stab = a.pointwise_stabilizer(x);
        assert_eq!(stab, vec![GroupElement(vec![0, 0]), GroupElement(vec![0, 1])]);
        let free = a.index_of(&[1, 2]).unwrap();
        assert_eq!(a.pointwise_stabilizer(free), vec![a.group().identity()]);
    }

    #[test]
    fn burnside_and_orbit_stabilizer() {
        let a = words_example();
        let total: usize = a.group().elements().iter().map(|g| a.fixed_point_count(g)).sum();
        assert_eq!(total as u64, a.group().order() * a.orbits().len() as u64);
        for x in 0..a.len() {
            let orbit = a.orbits().into_iter().find(|o| o.members.contains(&x)).unwrap();
            assert_eq!(orbit.len() as u64 * a.pointwise_stabilizer(x).len() as u64, a.group().order());
        }
    }

    #[test]
    fn construction_checks() {
        let group = AbelianGroupSpec::new(vec![2, 2]).unwrap();
        let elements: Vec<Encoding> = (1..=3).map(|i| vec![i]).collect();
        let p12 = Permutation::parse("(1,2)", Some(3)).unwrap();
        let p23 = Permutation::parse("(2,3)", Some(3)).unwrap();
        assert!(matches!(
            AbelianAction::new(group.clone(), elements.clone(), vec![p12.clone(), p23]),
            Err(GroupError::NotCommuting(0, 1))
        ));
        let c3 = Permutation::parse("(1,2,3)", None).unwrap();
        assert!(matches!(
            AbelianAction::new(group, elements, vec![p12, c3]),
            Err(GroupError::OrderViolation { .. })
        ));
    }

    #[test]
    fn nearly_free_examples() {
        let check = |s: &str, n| {
            AbelianAction::cyclic_on_points(&Permutation::parse(s, Some(n)).unwrap())
                .unwrap()
                .is_nearly_free()
                .unwrap()
        };
        assert!(check("(1,2,3)", 3));
        assert!(check("(1,2,3)", 4));
        assert!(!check("(1,2,3)(4,5)", 5));
        assert!(check("()", 3));
        assert!(!check("(1,2)", 4));
        assert!(words_example().is_nearly_free().is_err());
    }

    #[test]
    fn character_kernels() {
        let g = AbelianGroupSpec::new(vec![3, 2]).unwrap();
        assert_eq!(character_kernel(&g, &[0, 0]).len(), 6);
        assert_eq!(
            character_kernel(&g, &[1, 0]),
            vec![GroupElement(vec![0, 0]), GroupElement(vec![0, 1])]
        );
        assert_eq!(
            character_kernel(&g, &[0, 1]),
            vec![GroupElement(vec![0, 0]), GroupElement(vec![1, 0]), GroupElement(vec![2, 0])]
        );
    }
}
