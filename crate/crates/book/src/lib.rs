//! Code listings of the guide in `book/src`, run as doctests.

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        mod $name {}
    };
}

chapter!(introduction, "introduction.md");
chapter!(algebras, "algebras.md");
chapter!(modules, "modules.md");
chapter!(homology, "homology.md");
chapter!(auslander_reiten, "auslander-reiten.md");
chapter!(decomposition, "decomposition.md");
chapter!(tilting, "tilting.md");
chapter!(tiltedness, "tiltedness.md");
chapter!(cli, "cli.md");
