//! Automorphism groups of the semigroups of order 3, and the canonical form
//! that identifies a relabelled table with its class.

use semirings::{
    aut_star_group, automorphism_group, enumerate_semigroups, Equivalence, OpTable, Permutation,
    SemigroupConstraint,
};

fn main() -> semirings::Result<()> {
    let classes = enumerate_semigroups(3, &SemigroupConstraint::default(), Equivalence::Iso)?;
    println!("{} semigroups of order 3 up to isomorphism", classes.len());
    println!("{:<14} {:>5} {:>6}  other elements of Aut*", "table", "|Aut|", "|Aut*|");
    for class in &classes {
        let aut = automorphism_group(&class.table);
        let star = aut_star_group(&class.table);
        let others: Vec<String> = star
            .elements()
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| {
                let kind = if class.table.fixed_by(g) { "auto" } else { "anti" };
                format!("{g} ({kind})")
            })
            .collect();
        println!(
            "{:<14} {:>5} {:>6}  {}",
            class.table.to_string(),
            aut.order(),
            star.order(),
            others.join(", ")
        );
    }

    // x * y = y when x = 2 and 0 otherwise, relabelled and then recognised.
    let t = OpTable::from_rows(&[[0, 0, 0], [0, 0, 0], [0, 1, 2]])?;
    let sigma = Permutation::from_cycles(3, &[&[0, 2, 1]])?;
    let moved = t.apply_perm(&sigma)?;
    let canon = moved.canonical_form(Equivalence::Iso);
    println!();
    println!("{t} relabelled by {sigma} is {moved}");
    println!("canonical form {} reached via {}", canon.table, canon.perm);
    let anti = t.canonical_form(Equivalence::IsoOrAnti);
    println!(
        "up to anti-isomorphism: {} (via the transpose: {})",
        anti.table, anti.transposed
    );
    Ok(())
}
