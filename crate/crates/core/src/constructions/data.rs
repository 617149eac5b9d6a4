//! Generators of the explicit families, copied verbatim in cycle notation.

pub(crate) mod psl2_11 {
    pub const DEGREE: usize = 11;
    pub const X: &str = "(1, 11, 8, 3, 6, 9, 4, 10, 2, 7, 5)";
    pub const Y: &str = "(2, 10, 6)(3, 11, 4)(7, 8, 9)";
    pub const T: &str = "(2, 5)(3, 9)(6, 11)(8, 10)";
}

pub(crate) mod psl2_29 {
    pub const DEGREE: usize = 30;
    pub const X: &str = "(1, 21, 10, 9, 22, 28, 13, 15, 30, 6, 19, 18, 7, 27, 23, 4, 25, 17, 20, 2, 12, 29, 16, 26, 8,11, 3, 24, 5)";
    pub const Y: &str = "(1, 24, 9)(2, 6, 5)(3, 27, 21)(4, 12, 20)(7, 25, 26)(8, 10, 13)(11, 14, 16)(15, 30, 23)(17, 28,29)(18, 22, 19)";
    pub const T: &str = "(1, 3)(2, 10)(4, 11)(5, 19)(6, 24)(7, 16)(8, 17)(9, 28)(12, 27)(13, 20)(14, 22)(15, 26)(18, 30)(21, 23)";
    pub const Z: &str = "(2, 18, 23, 10, 29, 9, 17)(3, 7, 19, 20, 4, 24, 30)(5, 22, 27, 13, 28, 6, 16)(8, 12, 15, 21, 11, 25, 26)";
}

pub(crate) mod m23 {
    pub const DEGREE: usize = 23;
    pub const X: &str = "(1, 4, 6, 7, 2, 19, 3, 11, 9, 20, 13, 23, 16, 8, 21, 5, 14, 22, 18, 15, 17, 10, 12)";
    pub const Y: &str = "(1, 14, 6, 5, 9, 2, 10, 3, 15, 13, 11)(4, 22, 16, 19, 17, 8, 21, 7, 12, 18, 23)";
    pub const T: &str = "(1, 17)(3, 9)(5, 18)(6, 13)(7, 12)(10, 19)(14, 22)(21, 23)";
    /// Order-11 element normalizing `<x>` but not the double coset.
    pub const B: &str = "(2, 14, 18, 7, 16, 6, 9, 20, 8, 3, 4)(5, 21, 13, 22, 12, 15, 11, 19, 17, 23, 10)";
    /// The 23 elements of `G ∩ HtH`, in printed order.
    pub const S: [&str; 23] = [
        "(1, 14, 6, 5, 9, 2, 10, 3, 15, 13, 11)(4, 22, 16, 19, 17, 8, 21, 7, 12, 18, 23)",
        "(1, 11, 13, 15, 3, 10, 2, 9, 5, 6, 14)(4, 23, 18, 12, 7, 21, 8, 17, 19, 16, 22)",
        "(1, 15, 5, 2, 12, 18, 16, 14, 21, 13, 7)(3, 6, 4, 22, 8, 19, 10, 17, 9, 23, 11)",
        "(1, 7, 13, 21, 14, 16, 18, 12, 2, 5, 15)(3, 11, 23, 9, 17, 10, 19, 8, 22, 4, 6)",
        "(1, 9, 14)(2, 19, 5, 4, 22, 12)(3, 21, 6)(7, 23, 15, 11, 8, 18)(10, 13)(16, 17)",
        "(1, 14, 9)(2, 12, 22, 4, 5, 19)(3, 6, 21)(7, 18, 8, 11, 15, 23)(10, 13)(16, 17)",
        "(1, 4, 3)(2, 6)(5, 8, 7, 10, 14, 21)(9, 12, 17, 22, 16, 13)(11, 19, 23)(15, 18)",
        "(1, 3, 4)(2, 6)(5, 21, 14, 10, 7, 8)(9, 13, 16, 22, 17, 12)(11, 23, 19)(15, 18)",
        "(1, 12)(2, 19, 3)(4, 6, 18, 5, 8, 10)(7, 11, 23, 16, 14, 22)(9, 13)(15, 17, 21)",
        "(1, 12)(2, 3, 19)(4, 10, 8, 5, 18, 6)(7, 22, 14, 16, 23, 11)(9, 13)(15, 21, 17)",
        "(1, 7, 3, 16, 12)(2, 11, 23, 22, 14)(4, 15, 5, 18, 10)(6, 9, 13, 8, 17)",
        "(1, 12, 16, 3, 7)(2, 14, 22, 23, 11)(4, 10, 18, 5, 15)(6, 17, 8, 13, 9)",
        "(3, 16, 23, 12, 6)(4, 11, 22, 18, 10)(5, 17, 7, 19, 9)(8, 14, 15, 21, 13)",
        "(3, 6, 12, 23, 16)(4, 10, 18, 22, 11)(5, 9, 19, 7, 17)(8, 13, 21, 15, 14)",
        "(1, 15, 12, 6, 19)(2, 11, 13, 14, 7)(3, 16, 21, 22, 4)(5, 10, 17, 9, 23)",
        "(1, 19, 6, 12, 15)(2, 7, 14, 13, 11)(3, 4, 22, 21, 16)(5, 23, 9, 17, 10)",
        "(1, 7)(3, 8)(4, 6)(9, 19)(11, 23)(12, 15)(13, 18)(14, 21)",
        "(2, 6)(3, 10)(4, 22)(8, 16)(11, 13)(12, 18)(14, 15)(21, 23)",
        "(1, 11)(2, 16)(4, 19)(6, 12)(8, 14)(9, 13)(15, 18)(17, 22)",
        "(1, 17)(3, 9)(5, 18)(6, 13)(7, 12)(10, 19)(14, 22)(21, 23)",
        "(1, 15)(5, 16)(6, 18)(7, 19)(8, 21)(9, 23)(11, 12)(17, 22)",
        "(1, 17)(2, 9)(5, 11)(6, 19)(7, 13)(8, 23)(10, 12)(14, 15)",
        "(1, 5)(2, 4)(3, 11)(8, 13)(9, 19)(10, 15)(14, 16)(18, 23)",
    ];
}
