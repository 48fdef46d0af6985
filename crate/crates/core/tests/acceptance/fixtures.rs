//! Transcribed reference data.
//!
//! Mean coefficient rows are keyed by every pattern sharing the row and give
//! `e1..e7` as expressions in `n` (see `expr.rs`): `C(a,b)` is a binomial
//! coefficient and `F(a,b)` a falling factorial.
//!
//! M-set tables list, for one class `(j, ell)`, the classical pattern of each
//! template (column) under each relative order (row). A leading `_` marks the
//! rows consistent with `[21-3)` and the `213` cells counted in them.

pub type CoefficientRow = (&'static [&'static str], [&'static str; 7]);

pub struct Block {
    pub templates: &'static [&'static str],
    pub rows: &'static [(&'static str, &'static [&'static str])],
}

pub struct MsetTable {
    pub class: (usize, usize),
    pub blocks: &'static [Block],
}

pub const TABLE_ONE: &[CoefficientRow] = &[
    (&["(1-2-3)"], ["C(n,3)/6", "((n+1)(3n-4))/60", "(n+1)/30", "(3n-2)/30", "0", "1/15", "0"]),
    (&["(1-3-2)", "(2-1-3)"], ["C(n,3)/6", "((n+1)(n-3))/60", "-(n+1)/60", "-(n+1)/20", "0", "-1/30", "0"]),
    (&["(2-3-1)", "(3-1-2)"], ["C(n,3)/6", "-((n+1)(3n-4))/120", "-(n+1)/60", "(n+1)/30", "0", "-1/30", "0"]),
    (&["(3-2-1)"], ["C(n,3)/6", "-((n+1)(n-3))/30", "(n+1)/30", "-(2n-3)/30", "0", "1/15", "0"]),
    (&["(12-3)", "(1-23)"], ["C(n-1,2)/6", "(n^2+3n-6)/(12n)", "(n+2)/(12n)", "(5n-6)/(12n)", "0", "1/(4n)", "0"]),
    (&["(13-2)", "(2-13)"], ["C(n-1,2)/6", "(n-3)/(6n)", "-(n-1)/(6n)", "-1/(2n)", "0", "0", "0"]),
    (&["(21-3)", "(1-32)"], ["C(n-1,2)/6", "(n(n-3))/(12n)", "(n-4)/(12n)", "-1/4", "0", "-1/(4n)", "0"]),
    (&["(23-1)", "(3-12)"], ["C(n-1,2)/6", "-(n(n-1))/(12n)", "(n-4)/(12n)", "1/12", "0", "-1/(4n)", "0"]),
    (&["(31-2)", "(2-31)"], ["C(n-1,2)/6", "-(2n-3)/(6n)", "-(n-1)/(6n)", "1/(2n)", "0", "0", "0"]),
    (&["(32-1)", "(3-21)"], ["C(n-1,2)/6", "-((n+2)(n-3))/(12n)", "(n+2)/(12n)", "-(n-2)/(4n)", "0", "1/(4n)", "0"]),
    (&["[1-2-3)", "(1-2-3]"], ["C(n-1,2)/6", "(5n-7)/24", "1/8", "5/24", "0", "1/(8n)", "0"]),
    (&["[1-3-2)", "(2-1-3]"], ["C(n-1,2)/6", "(n-3)/8", "-1/8", "-5/24", "0", "-1/(8n)", "0"]),
    (&["[2-1-3)", "(1-3-2]"], ["C(n-1,2)/6", "0", "0", "-1/6", "0", "0", "0"]),
    (&["[2-3-1)", "(3-1-2]"], ["C(n-1,2)/6", "-(n-2)/6", "0", "1/6", "0", "0", "0"]),
    (&["[3-1-2)", "(2-3-1]"], ["C(n-1,2)/6", "-(n+1)/24", "-1/8", "1/8", "0", "-1/(8n)", "0"]),
    (&["[3-2-1)", "(3-2-1]"], ["C(n-1,2)/6", "-(n-3)/8", "1/8", "-1/8", "0", "1/(8n)", "0"]),
    (&["(12-3]", "[1-23)"], ["(n-2)/6", "1/3", "(n+2)/(6F(n,2))", "1/(2(n-1))", "0", "1/(2F(n,2))", "0"]),
    (&["(13-2]", "[2-13)"], ["(n-2)/6", "-(n-3)/(6n)", "-(2n-5)/(6F(n,2))", "-1/(2F(n,2))", "0", "1/(2F(n,2))", "0"]),
    (&["(21-3]", "[1-32)"], ["(n-2)/6", "((2n+1)(n-3))/(6F(n,2))", "(n-7)/(6F(n,2))", "-(n+1)/(2F(n,2))", "0", "-1/(F(n,2))", "0"]),
    (&["(23-1]", "[3-12)"], ["(n-2)/6", "-(n^2-4n+9)/(6F(n,2))", "(n-7)/(6F(n,2))", "(n-3)/(2F(n,2))", "0", "-1/(F(n,2))", "0"]),
    (&["(31-2]", "[2-31)"], ["(n-2)/6", "-(n^2+2n-9)/(6F(n,2))", "-(2n-5)/(6F(n,2))", "3/(2F(n,2))", "0", "1/(2F(n,2))", "0"]),
    (&["(32-1]", "[3-21)"], ["(n-2)/6", "-((n+2)(n-3))/(6F(n,2))", "(n+2)/(6F(n,2))", "-(n-2)/(2F(n,2))", "0", "1/(2F(n,2))", "0"]),
    (&["[12-3)", "(1-23]"], ["(n-2)/6", "(n^2+5n-12)/(6F(n,2))", "1/(3n)", "(n-2)/(F(n,2))", "0", "0", "0"]),
    (&["[13-2)", "(2-13]"], ["(n-2)/6", "((n+2)(n-3))/(6F(n,2))", "-2/(3n)", "-1/(F(n,2))", "0", "0", "0"]),
    (&["[21-3)", "(1-32]"], ["(n-2)/6", "((n-3)(n-4))/(6F(n,2))", "1/(3n)", "-(n-2)/(F(n,2))", "0", "0", "0"]),
    (&["[23-1)", "(3-12]"], ["(n-2)/6", "-(n^2-n-3)/(3F(n,2))", "1/(3n)", "1/(F(n,2))", "0", "0", "0"]),
    (&["[31-2)", "(2-31]"], ["(n-2)/6", "(n-6)/(6n)", "-2/(3n)", "1/(F(n,2))", "0", "0", "0"]),
    (&["[32-1)", "(3-21]", "[3-2-1]"], ["(n-2)/6", "-(n-3)/(3n)", "1/(3n)", "-1/(F(n,2))", "0", "0", "0"]),
    (&["[1-2-3]"], ["(n-2)/6", "(2n-3)/(3n)", "1/(3n)", "1/(F(n,2))", "0", "0", "0"]),
    (&["[1-3-2]", "[2-1-3]"], ["(n-2)/6", "(n-3)/(6n)", "-1/(6n)", "-1/(2n)", "0", "0", "0"]),
    (&["[2-3-1]", "[3-1-2]"], ["(n-2)/6", "-(2n-3)/(6n)", "-1/(6n)", "1/(2n)", "0", "0", "0"]),
];

pub const TABLE_TWO: &[CoefficientRow] = &[
    (&["(123)"], ["(n-2)/6", "1/n", "1/(F(n,2))", "1/n", "0", "1/(F(n,2))", "0"]),
    (&["(132)", "(213)"], ["(n-2)/6", "(n-3)/(2F(n,2))", "-1/(2F(n,2))", "-3/(2F(n,2))", "0", "-1/(2F(n,2))", "0"]),
    (&["(231)", "(312)"], ["(n-2)/6", "-1/(2n)", "-1/(2F(n,2))", "1/(2F(n,2))", "0", "-1/(2F(n,2))", "0"]),
    (&["(321)"], ["(n-2)/6", "-(n-3)/(F(n,2))", "1/(F(n,2))", "-(n-3)/(F(n,2))", "0", "1/(F(n,2))", "0"]),
    (&["[123)", "(123]"], ["1/6", "1/(n(n-2))", "1/(F(n,3))", "1/(n(n-2))", "0", "1/(F(n,3))", "0"]),
    (&["[132)", "(213]"], ["1/6", "(2n-6)/(F(n,3))", "-2/(F(n,3))", "(n-6)/(F(n,3))", "0", "-2/(F(n,3))", "0"]),
    (&["[213)", "(132]", "[321)", "(321]"], ["1/6", "-(n-3)/(F(n,3))", "1/(F(n,3))", "-(n-3)/(F(n,3))", "0", "1/(F(n,3))", "0"]),
    (&["[231)", "(312]"], ["1/6", "-(2n-5)/(F(n,3))", "1/(F(n,3))", "-(n-5)/(F(n,3))", "0", "1/(F(n,3))", "0"]),
    (&["[312)", "(231]"], ["1/6", "(n-4)/(F(n,3))", "-2/(F(n,3))", "(n-4)/(F(n,3))", "0", "-2/(F(n,3))", "0"]),
    (&["[12-3]", "[1-23]"], ["1/6", "(n+1)/(2F(n,2))", "1/(2F(n,2))", "1/(2F(n,2))", "0", "-1/(2F(n,3))", "0"]),
    (&["[13-2]", "[2-13]"], ["1/6", "0", "-1/(F(n,2))", "0", "0", "1/(F(n,3))", "0"]),
    (&["[21-3]", "[1-32]"], ["1/6", "(n-3)/(2F(n,2))", "1/(2F(n,2))", "-3/(2F(n,2))", "0", "-1/(2F(n,3))", "0"]),
    (&["[23-1]", "[3-12]"], ["1/6", "-1/(2n)", "1/(2F(n,2))", "1/(2F(n,2))", "0", "-1/(2F(n,3))", "0"]),
    (&["[31-2]", "[2-31]"], ["1/6", "-1/(F(n,2))", "-1/(F(n,2))", "2/(F(n,3))", "0", "1/(F(n,3))", "0"]),
    (&["[32-1]", "[3-21]"], ["1/6", "-(n-3)/(2F(n,2))", "1/(2F(n,2))", "(n-6)/(2F(n,3))", "0", "-1/(2F(n,3))", "0"]),
];

pub const MSET_TABLES: &[MsetTable] = &[
    MsetTable {
        class: (3, 1),
        blocks: &[
            Block {
                templates: &["i1,i2,i3"],
                rows: &[
                    ("_i1<i2<i3", &["123"]),
                ],
            },
        ],
    },
    MsetTable {
        class: (3, 2),
        blocks: &[
            Block {
                templates: &["i1,i3,i2", "i3,i2,i1", "i2,i1,i3"],
                rows: &[
                    ("_i1<i2<i3", &["132", "321", "_213"]),
                ],
            },
        ],
    },
    MsetTable {
        class: (3, 3),
        blocks: &[
            Block {
                templates: &["i2,i3,i1", "i3,i1,i2"],
                rows: &[
                    ("_i1<i2<i3", &["231", "312"]),
                ],
            },
        ],
    },
    MsetTable {
        class: (4, 1),
        blocks: &[
            Block {
                templates: &["i1,i2,a4", "i1,a4,i3", "a4,i2,i3"],
                rows: &[
                    ("a4<i1<i2<i3", &["231", "213", "123"]),
                    ("i1<a4<i2<i3", &["132", "123", "123"]),
                    ("_i1<i2<a4<i3", &["123", "123", "_213"]),
                    ("_i1<i2<i3<a4", &["123", "132", "312"]),
                ],
            },
        ],
    },
    MsetTable {
        class: (4, 2),
        blocks: &[
            Block {
                templates: &["i2,i1,a4", "i3,a4,i1", "a4,i3,i2"],
                rows: &[
                    ("a4<i1<i2<i3", &["321", "312", "132"]),
                    ("i1<a4<i2<i3", &["312", "321", "132"]),
                    ("_i1<i2<a4<i3", &["_213", "321", "231"]),
                    ("_i1<i2<i3<a4", &["_213", "231", "321"]),
                ],
            },
        ],
    },
    MsetTable {
        class: (4, 3),
        blocks: &[
            Block {
                templates: &["i1,i3,a4", "i1,a4,i2", "i3,i2,a4"],
                rows: &[
                    ("a4<i1<i2<i3", &["231", "213", "321"]),
                    ("i1<a4<i2<i3", &["132", "123", "321"]),
                    ("_i1<i2<a4<i3", &["132", "132", "312"]),
                    ("_i1<i2<i3<a4", &["123", "132", "_213"]),
                ],
            },
            Block {
                templates: &["a4,i2,i1", "i2,a4,i3", "a4,i1,i3"],
                rows: &[
                    ("a4<i1<i2<i3", &["132", "213", "123"]),
                    ("i1<a4<i2<i3", &["231", "213", "213"]),
                    ("_i1<i2<a4<i3", &["321", "123", "_213"]),
                    ("_i1<i2<i3<a4", &["321", "132", "312"]),
                ],
            },
        ],
    },
    MsetTable {
        class: (4, 4),
        blocks: &[
            Block {
                templates: &["i2,i3,a4", "i3,a4,i2", "i3,i1,a4"],
                rows: &[
                    ("a4<i1<i2<i3", &["231", "312", "321"]),
                    ("i1<a4<i2<i3", &["231", "312", "312"]),
                    ("_i1<i2<a4<i3", &["132", "321", "312"]),
                    ("_i1<i2<i3<a4", &["123", "231", "_213"]),
                ],
            },
            Block {
                templates: &["a4,i3,i1", "i2,a4,i1", "a4,i1,i2"],
                rows: &[
                    ("a4<i1<i2<i3", &["132", "312", "123"]),
                    ("i1<a4<i2<i3", &["231", "321", "213"]),
                    ("_i1<i2<a4<i3", &["231", "231", "312"]),
                    ("_i1<i2<i3<a4", &["321", "231", "312"]),
                ],
            },
        ],
    },
    MsetTable {
        class: (5, 1),
        blocks: &[
            Block {
                templates: &["i1,a4,a5", "a4,i2,a5", "a4,a5,i3"],
                rows: &[
                    ("a4<i1<a5<i2<i3", &["213", "132", "123"]),
                    ("a5<i1<a4<i2<i3", &["231", "231", "213"]),
                    ("a4<i1<i2<a5<i3", &["213", "123", "123"]),
                    ("a5<i1<i2<a4<i3", &["231", "321", "213"]),
                    ("i1<a4<a5<i2<i3", &["123", "132", "123"]),
                    ("i1<a5<a4<i2<i3", &["132", "231", "213"]),
                    ("i1<a4<i2<a5<i3", &["123", "123", "123"]),
                    ("i1<a5<i2<a4<i3", &["132", "321", "213"]),
                    ("i1<a4<i2<i3<a5", &["123", "123", "132"]),
                    ("i1<a5<i2<i3<a4", &["132", "321", "312"]),
                    ("_i1<i2<a4<a5<i3", &["123", "_213", "123"]),
                    ("_i1<i2<a5<a4<i3", &["132", "312", "_213"]),
                    ("_i1<i2<a4<i3<a5", &["123", "_213", "132"]),
                    ("_i1<i2<a5<i3<a4", &["132", "312", "312"]),
                    ("a4<a5<i1<i2<i3", &["312", "132", "123"]),
                    ("a5<a4<i1<i2<i3", &["321", "231", "213"]),
                    ("a4<i1<i2<i3<a5", &["213", "123", "132"]),
                    ("a5<i1<i2<i3<a4", &["231", "321", "312"]),
                    ("_i1<i2<i3<a4<a5", &["123", "_213", "231"]),
                    ("_i1<i2<i3<a5<a4", &["132", "312", "321"]),
                ],
            },
        ],
    },
    MsetTable {
        class: (5, 2),
        blocks: &[
            Block {
                templates: &["i2,a4,a5", "i3,a4,a5", "a4,i1,a5"],
                rows: &[
                    ("a4<i1<a5<i2<i3", &["312", "312", "123"]),
                    ("a5<i1<a4<i2<i3", &["321", "321", "321"]),
                    ("a4<i1<i2<a5<i3", &["213", "312", "123"]),
                    ("a5<i1<i2<a4<i3", &["231", "321", "321"]),
                    ("i1<a4<a5<i2<i3", &["312", "312", "213"]),
                    ("i1<a5<a4<i2<i3", &["321", "321", "312"]),
                    ("i1<a4<i2<a5<i3", &["213", "312", "213"]),
                    ("i1<a5<i2<a4<i3", &["231", "321", "312"]),
                    ("i1<a4<i2<i3<a5", &["213", "213", "213"]),
                    ("i1<a5<i2<i3<a4", &["231", "231", "312"]),
                    ("_i1<i2<a4<a5<i3", &["123", "312", "_213"]),
                    ("_i1<i2<a5<a4<i3", &["132", "321", "312"]),
                    ("_i1<i2<a4<i3<a5", &["123", "_213", "_213"]),
                    ("_i1<i2<a5<i3<a4", &["132", "231", "312"]),
                    ("a4<a5<i1<i2<i3", &["312", "312", "132"]),
                    ("a5<a4<i1<i2<i3", &["321", "321", "231"]),
                    ("a4<i1<i2<i3<a5", &["213", "213", "123"]),
                    ("a5<i1<i2<i3<a4", &["231", "231", "321"]),
                    ("_i1<i2<i3<a4<a5", &["123", "123", "_213"]),
                    ("_i1<i2<i3<a5<a4", &["132", "132", "312"]),
                ],
            },
            Block {
                templates: &["a4,i3,a5", "a4,a5,i1", "a4,a5,i2"],
                rows: &[
                    ("a4<i1<a5<i2<i3", &["132", "132", "123"]),
                    ("a5<i1<a4<i2<i3", &["231", "312", "213"]),
                    ("a4<i1<i2<a5<i3", &["132", "132", "132"]),
                    ("a5<i1<i2<a4<i3", &["231", "312", "312"]),
                    ("i1<a4<a5<i2<i3", &["132", "231", "123"]),
                    ("i1<a5<a4<i2<i3", &["231", "321", "213"]),
                    ("i1<a4<i2<a5<i3", &["132", "231", "132"]),
                    ("i1<a5<i2<a4<i3", &["231", "321", "312"]),
                    ("i1<a4<i2<i3<a5", &["123", "231", "132"]),
                    ("i1<a5<i2<i3<a4", &["321", "321", "312"]),
                    ("_i1<i2<a4<a5<i3", &["132", "231", "231"]),
                    ("_i1<i2<a5<a4<i3", &["231", "321", "321"]),
                    ("_i1<i2<a4<i3<a5", &["123", "231", "231"]),
                    ("_i1<i2<a5<i3<a4", &["321", "321", "321"]),
                    ("a4<a5<i1<i2<i3", &["132", "123", "123"]),
                    ("a5<a4<i1<i2<i3", &["231", "213", "213"]),
                    ("a4<i1<i2<i3<a5", &["123", "132", "132"]),
                    ("a5<i1<i2<i3<a4", &["321", "312", "312"]),
                    ("_i1<i2<i3<a4<a5", &["_213", "231", "231"]),
                    ("_i1<i2<i3<a5<a4", &["312", "321", "321"]),
                ],
            },
        ],
    },
];
