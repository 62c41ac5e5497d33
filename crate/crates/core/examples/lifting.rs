//! Deciding lifting properties by bounded exhaustive search.

use symspec::modelcheck::{has_lifting_property, LiftingVerdict};
use symspec::sset::{boundary_inclusion, collapse_to_vertex, horn_inclusion, SimplicialMap, DEFAULT_BUDGET};

fn show(name: &str, v: &LiftingVerdict<SimplicialMap>) {
    match v {
        LiftingVerdict::Lifts { squares } => println!("{name}: lifts ({squares} squares)"),
        LiftingVerdict::Fails(w) => println!("{name}: fails; witness square commutes: {}", w.commutes()),
        LiftingVerdict::BudgetExceeded { limit } => println!("{name}: undecided within {limit} candidates"),
    }
}

fn main() -> symspec::Result<()> {
    let i = boundary_inclusion(1);
    let id = SimplicialMap::identity(i.target().clone());
    show("∂Δ[1] → Δ[1] against the identity", &has_lifting_property(&i, &id, DEFAULT_BUDGET)?);
    let p = collapse_to_vertex(1);
    show("∂Δ[1] → Δ[1] against the collapse", &has_lifting_property(&i, &p, DEFAULT_BUDGET)?);
    show("same, with a budget of 3", &has_lifting_property(&i, &p, 3)?);
    let h = horn_inclusion(2, 1)?;
    show("Λ²_1 → Δ[2] against Δ[2] → Δ[0]", &has_lifting_property(&h, &collapse_to_vertex(2), DEFAULT_BUDGET)?);
    Ok(())
}
