//! Why the census only tests one multiplication per double coset.
//!
//! Fix an addition `A` and a multiplication `M`. Relabelling `M` by `σ` gives
//! a candidate `M^σ`. Relabellings by `h σ k` with `h ∈ Aut(M)` and
//! `k ∈ Aut(A)` give isomorphic semirings, so one representative of each
//! double coset `Aut(M) σ Aut(A)` suffices.

use semirings::{
    automorphism_group, distributes, double_cosets, OpTable, PermGroup, Permutation,
};

fn main() -> semirings::Result<()> {
    // Addition: the semilattice where distinct elements add to 0. Its
    // automorphisms permute 1, 2 and 3 freely.
    let add = OpTable::from_fn(4, |x, y| if x == y { x } else { 0 });
    // Multiplication: every product is 0 except 1 * 2 = 3.
    let mul = OpTable::from_fn(4, |x, y| if (x, y) == (1, 2) { 3 } else { 0 });
    let h = automorphism_group(&mul);
    let k = automorphism_group(&add);
    println!("|Aut(M)| = {}, |Aut(A)| = {}", h.order(), k.order());

    let cosets = double_cosets(&h, &k)?;
    let total: usize = cosets.iter().map(|c| c.size).sum();
    println!("{} double cosets covering {total} permutations", cosets.len());
    for c in &cosets {
        let moved = mul.apply_perm(&c.representative)?;
        let meet = h.intersection(&k.conjugate(&c.representative.inverse()));
        println!(
            "  rep {:<10} size {:>2} = {}*{}/{}  distributes: {}",
            c.representative.to_string(),
            c.size,
            h.order(),
            k.order(),
            meet.order(),
            distributes(&moved, &add)?
        );
    }

    // The same machinery on explicit groups.
    let s3 = PermGroup::symmetric(3)?;
    let swap = semirings::group_closure(3, &[Permutation::from_cycles(3, &[&[0, 1]])?])?;
    let sizes: Vec<usize> = double_cosets(&swap, &swap)?.iter().map(|c| c.size).collect();
    println!("<(0 1)> \\ S3 / <(0 1)>: sizes {sizes:?} of {}", s3.order());
    Ok(())
}
