use super::{phi_r, SubgroupError};
use crate::coloring::{member_e, member_e_even};
use crate::trees::{BinaryTree, TreeDiagram};

/// `d = x_0^a · φ_R(f) · x_0^{-b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub a: i64,
    pub f: TreeDiagram,
    pub b: i64,
}

impl Decomposition {
    pub fn rebuild(&self) -> TreeDiagram {
        let x0 = TreeDiagram::generator(0);
        x0.pow(self.a)
            .multiply(&phi_r(&self.f))
            .multiply(&x0.pow(-self.b))
    }
}

/// Peels the powers of `x_0` off a member of `ℰ` using its normal form.
///
/// With `even` set the element must lie in the even part and both exponents are
/// rounded up to even numbers, so the factorisation uses `x_0^2` only.
pub fn decompose_e(d: &TreeDiagram, even: bool) -> Result<Decomposition, SubgroupError> {
    let ok = if even { member_e_even(d) } else { member_e(d) };
    if !ok {
        return Err(SubgroupError::NotAMember(d.to_string()));
    }
    let nf = d.normal_form();
    let (mut a, mut b) = (nf.a(0) as i64, nf.b(0) as i64);
    if even && a % 2 == 1 {
        a += 1;
        b += 1;
    }
    let x0 = TreeDiagram::generator(0);
    let inner = x0.pow(-a).multiply(d).multiply(&x0.pow(b));
    let f = unshift_r(&inner).ok_or_else(|| SubgroupError::NotInShiftImage(inner.to_string()))?;
    Ok(Decomposition { a, f, b })
}

/// The preimage under `φ_R`, if there is one.
pub fn unshift_r(d: &TreeDiagram) -> Option<TreeDiagram> {
    if d.is_identity() {
        return Some(TreeDiagram::identity());
    }
    match (d.top(), d.bottom()) {
        (BinaryTree::Caret(l1, r1), BinaryTree::Caret(l2, r2)) if l1.is_leaf() && l2.is_leaf() => {
            Some(TreeDiagram::new((**r1).clone(), (**r2).clone()).expect("equal leaf counts"))
        }
        _ => None,
    }
}
