use crate::graph::VertexId;

/// A partition of a vertex set into nonempty classes.
///
/// Classes are sorted internally and ordered by their smallest member, so
/// two partitions of the same relation compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<Vec<VertexId>>,
    class_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition of `0..n` from arbitrary class labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut first_seen: Vec<Option<usize>> = Vec::new();
        let mut classes: Vec<Vec<VertexId>> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for (v, &label) in labels.iter().enumerate() {
            if label >= first_seen.len() {
                first_seen.resize(label + 1, None);
            }
            let idx = *first_seen[label].get_or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(VertexId::new(v));
            class_of.push(idx);
        }
        // Vertices are visited in increasing order, so classes already come
        // out sorted and ordered by their smallest member.
        Partition { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    pub fn class_of(&self, v: VertexId) -> usize {
        self.class_of[v.index()]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Number of vertices covered.
    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn same(&self, u: VertexId, v: VertexId) -> bool {
        self.class_of(u) == self.class_of(v)
    }

    /// True when every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.vertex_count() == coarser.vertex_count()
            && self.classes.iter().all(|class| {
                let target = coarser.class_of(class[0]);
                class.iter().all(|&v| coarser.class_of(v) == target)
            })
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins, keeps labels stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn into_partition(mut self) -> Partition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    #[test]
    fn labels_are_canonicalised() {
        let p = Partition::from_labels(&[7, 3, 7, 3, 9]);
        let q = Partition::from_labels(&[0, 1, 0, 1, 2]);
        assert_eq!(p, q);
        assert_eq!(p.classes(), &[vec![v(0), v(2)], vec![v(1), v(3)], vec![v(4)]]);
        assert!(p.same(v(1), v(3)));
        assert!(!p.same(v(0), v(4)));
    }

    #[test]
    fn union_find_merges() {
        let mut uf = UnionFind::new(5);
        uf.union(3, 1);
        uf.union(4, 3);
        let p = uf.into_partition();
        assert_eq!(p.len(), 3);
        assert!(p.same(v(1), v(4)));
    }

    #[test]
    fn refinement() {
        let fine = Partition::from_labels(&[0, 1, 2, 2]);
        let coarse = Partition::from_labels(&[0, 0, 1, 1]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(fine.refines(&fine));
    }

    #[test]
    fn empty() {
        let p = Partition::from_labels(&[]);
        assert!(p.is_empty());
        assert_eq!(p.vertex_count(), 0);
    }
}
