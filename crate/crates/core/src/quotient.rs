use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::subgroup::Subgroup;

/// `G/N` realised as the permutation action of `G` on the right cosets of `N`.
#[derive(Debug)]
pub struct QuotientHandle {
    kernel: Subgroup,
    coset_reps: Vec<usize>,
    coset_of: Vec<u32>,
    projection: Vec<u32>,
    quotient: Group,
}

impl QuotientHandle {
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Least element of each coset, in coset order.
    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x] as usize
    }

    pub fn group(&self) -> &Group {
        &self.quotient
    }

    /// Image of a parent element in the quotient group.
    pub fn project(&self, x: usize) -> usize {
        self.projection[x] as usize
    }
}

pub fn quotient(g: &Group, n: &Subgroup) -> Result<QuotientHandle> {
    if !n.is_normal(g) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut coset_reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let c = coset_reps.len() as u32;
        coset_reps.push(x);
        for h in n.members() {
            coset_of[g.mul(h, x)] = c;
        }
    }
    let k = coset_reps.len();
    let induced = |x: usize| {
        let images: Vec<u32> = coset_reps.iter().map(|&r| coset_of[g.mul(r, x)]).collect();
        Permutation::new(images).expect("coset action is a bijection")
    };
    let gens = g.generator_ids().iter().map(|&t| induced(t)).collect();
    let name = format!("{}/N{}", g.name(), n.order());
    let quotient = Group::from_generators(name, k, gens, g.caps())?;
    let projection = (0..g.order())
        .map(|x| {
            quotient
                .index_of(&induced(x))
                .expect("induced permutation lies in the quotient") as u32
        })
        .collect();
    Ok(QuotientHandle {
        kernel: n.clone(),
        coset_reps,
        coset_of,
        projection,
        quotient,
    })
}
