use std::fmt;

/// A bracket expression: a leaf, or the bracket of two subtrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketTree<L> {
    Leaf(L),
    Node(Box<BracketTree<L>>, Box<BracketTree<L>>),
}

impl<L> BracketTree<L> {
    pub fn leaf(l: L) -> Self {
        BracketTree::Leaf(l)
    }

    pub fn node(left: BracketTree<L>, right: BracketTree<L>) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn map_leaves<M>(&self, f: &mut impl FnMut(&L) -> M) -> BracketTree<M> {
        match self {
            BracketTree::Leaf(l) => BracketTree::Leaf(f(l)),
            BracketTree::Node(l, r) => BracketTree::node(l.map_leaves(f), r.map_leaves(f)),
        }
    }

    pub fn try_map_leaves<M, E>(
        &self,
        f: &mut impl FnMut(&L) -> Result<M, E>,
    ) -> Result<BracketTree<M>, E> {
        Ok(match self {
            BracketTree::Leaf(l) => BracketTree::Leaf(f(l)?),
            BracketTree::Node(l, r) => BracketTree::node(l.try_map_leaves(f)?, r.try_map_leaves(f)?),
        })
    }

    /// Post-order fold: `leaf` on leaves, `node` combines child results.
    pub fn fold<T>(&self, leaf: &mut impl FnMut(&L) -> T, node: &mut impl FnMut(T, T) -> T) -> T {
        match self {
            BracketTree::Leaf(l) => leaf(l),
            BracketTree::Node(l, r) => {
                let a = l.fold(leaf, node);
                let b = r.fold(leaf, node);
                node(a, b)
            }
        }
    }

    pub fn leaves(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a L>) {
        match self {
            BracketTree::Leaf(l) => out.push(l),
            BracketTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }
}

impl<L: fmt::Display> fmt::Display for BracketTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(l) => write!(f, "{l}"),
            BracketTree::Node(l, r) => write!(f, "[{l}, {r}]"),
        }
    }
}
