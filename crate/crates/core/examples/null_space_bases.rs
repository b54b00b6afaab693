use quartic_circulant::extremal::applicable_families;
use quartic_circulant::oracle::{kernel, same_span};
use quartic_circulant::{NullSpaceDescriptor, QuarticCirculant};

fn main() -> quartic_circulant::Result<()> {
    for (n, p, q) in [
        (6, 1, 2),
        (8, 1, 3),
        (10, 1, 4),
        (16, 2, 6),
        (16, 1, 7),
        (20, 1, 2),
    ] {
        let g = QuarticCirculant::new(n, p, q)?;
        let a = g.adjacency_matrix();
        let oracle = kernel(&a).integer_basis();
        for kind in applicable_families(&g) {
            let d = NullSpaceDescriptor::closed_form(kind, g.order())
                .expect("family has a closed form");
            let annihilated = d.basis.iter().all(|v| a.annihilates(v));
            println!(
                "{g}: {kind}, {} vectors, annihilated {annihilated}, matches elimination {}",
                d.dimension(),
                same_span(&d.basis, &oracle)
            );
        }
    }
    Ok(())
}
