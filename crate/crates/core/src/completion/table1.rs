//! Rows of the products table for the genus-three closure set, transcribed
//! as `(row, [row * a_0, …, row * a_6])`.

use super::humphries::TableExpr::{self, C, CA0, F};

pub(super) const TABLE1: [(TableExpr, [TableExpr; 7]); 35] = [
    (F(1, 5, "x01"), [C(1, 5), F(2, 5, "x01"), F(1, 5, "x01"), F(1, 5, "x01"), F(1, 5, "x41"), CA0(1, 4), F(1, 6, "x01")]),
    (F(1, 5, "x41"), [F(1, 5, "x41"), F(2, 5, "x41"), F(1, 5, "x41"), F(1, 5, "y31"), F(1, 5, "x01"), F(1, 5, "x41"), F(1, 6, "x41")]),
    (F(1, 5, "y31"), [F(1, 5, "y31"), F(2, 5, "y31"), F(1, 5, "y21"), F(1, 5, "x41"), F(1, 5, "y31"), F(1, 5, "y31"), F(1, 6, "y31")]),
    (F(1, 5, "y21"), [F(1, 5, "y21"), F(1, 5, "y21"), F(1, 5, "y31"), F(1, 5, "y21"), F(1, 5, "y21"), F(1, 5, "y21"), F(1, 6, "y21")]),
    (F(1, 6, "x01"), [C(1, 6), F(2, 6, "x01"), F(1, 6, "x01"), F(1, 6, "x01"), F(1, 6, "x41"), F(1, 6, "x01"), F(1, 5, "x01")]),
    (F(1, 6, "x41"), [F(1, 6, "x41"), F(2, 6, "x41"), F(1, 6, "x41"), F(1, 6, "y31"), F(1, 6, "x01"), F(1, 6, "y53"), F(1, 5, "x41")]),
    (F(1, 6, "y31"), [F(1, 6, "y31"), F(2, 6, "y31"), F(1, 6, "y21"), F(1, 6, "x41"), F(1, 6, "y31"), F(1, 6, "y52"), F(1, 5, "y31")]),
    (F(1, 6, "y21"), [F(1, 6, "y21"), F(1, 6, "y21"), F(1, 6, "y31"), F(1, 6, "y21"), F(1, 6, "y21"), F(1, 6, "y51"), F(1, 5, "y21")]),
    (F(1, 6, "y51"), [F(1, 6, "y51"), F(1, 6, "y51"), F(1, 6, "y52"), F(1, 6, "y51"), F(1, 6, "x42"), F(1, 6, "y21"), F(1, 6, "y51")]),
    (F(1, 6, "x42"), [F(1, 6, "x03"), F(1, 6, "x42"), F(1, 6, "x44"), F(1, 6, "x31"), F(1, 6, "y51"), F(1, 6, "x42"), F(1, 6, "x42")]),
    (F(1, 6, "x31"), [F(1, 6, "x02"), F(1, 6, "x31"), F(1, 6, "x31"), F(1, 6, "x42"), F(1, 6, "x31"), F(1, 6, "x31"), F(1, 6, "x31")]),
    (F(1, 6, "x02"), [F(1, 6, "x31"), F(1, 6, "x02"), F(1, 6, "x02"), F(1, 6, "x03"), F(1, 6, "x43"), F(1, 6, "x02"), F(1, 6, "x02")]),
    (F(1, 6, "x43"), [F(1, 6, "x43"), F(1, 6, "x43"), F(1, 6, "x43"), F(1, 6, "x43"), F(1, 6, "x02"), F(1, 6, "x51"), F(1, 6, "x43")]),
    (F(1, 6, "x51"), [F(1, 6, "x51"), F(1, 6, "x51"), F(1, 6, "x51"), F(1, 6, "x51"), F(1, 6, "x51"), F(1, 6, "x43"), F(1, 6, "x61")]),
    (F(1, 6, "x61"), [F(1, 6, "x61"), F(1, 6, "x61"), F(1, 6, "x61"), F(1, 6, "x61"), F(1, 6, "x61"), F(1, 6, "x61"), F(1, 6, "x51")]),
    (F(1, 6, "x03"), [F(1, 6, "x42"), F(1, 6, "x03"), F(1, 6, "x04"), F(1, 6, "x02"), F(1, 6, "x03"), F(1, 6, "x03"), F(1, 6, "x03")]),
    (F(1, 6, "y52"), [F(1, 6, "y52"), F(2, 6, "y52"), F(1, 6, "y51"), F(1, 6, "y53"), F(1, 6, "x44"), F(1, 6, "y31"), F(1, 6, "y52")]),
    (F(1, 6, "x44"), [F(1, 6, "x04"), F(2, 6, "x44"), F(1, 6, "x42"), F(1, 6, "x44"), F(1, 6, "y52"), F(1, 6, "x44"), F(1, 6, "x44")]),
    (F(1, 6, "x04"), [F(1, 6, "x44"), F(2, 6, "x04"), F(1, 6, "x03"), F(1, 6, "x04"), F(1, 6, "x04"), F(1, 6, "x04"), F(1, 6, "x04")]),
    (F(1, 6, "y53"), [F(1, 6, "y53"), F(2, 6, "y53"), F(1, 6, "y53"), F(1, 6, "y52"), F(1, 6, "y53"), F(1, 6, "x41"), F(1, 6, "y53")]),
    (F(2, 5, "x01"), [C(2, 5), F(1, 5, "x01"), F(3, 5, "x01"), F(2, 5, "x01"), F(2, 5, "x41"), CA0(2, 4), F(2, 6, "x01")]),
    (F(2, 5, "x41"), [F(2, 5, "x41"), F(1, 5, "x41"), F(3, 5, "x41"), F(2, 5, "y31"), F(2, 5, "x01"), F(2, 5, "x41"), F(2, 6, "x41")]),
    (F(2, 5, "y31"), [F(2, 5, "y31"), F(1, 5, "y31"), F(2, 5, "y31"), F(2, 5, "x41"), F(2, 5, "y31"), F(2, 5, "y31"), F(2, 6, "y31")]),
    (F(2, 6, "x01"), [C(2, 6), F(1, 6, "x01"), F(3, 6, "x01"), F(2, 6, "x01"), F(2, 6, "x41"), F(2, 6, "x01"), F(2, 5, "x01")]),
    (F(2, 6, "x41"), [F(2, 6, "x41"), F(1, 6, "x41"), F(3, 6, "x41"), F(2, 6, "y31"), F(2, 6, "x01"), F(2, 6, "y53"), F(2, 5, "x41")]),
    (F(2, 6, "y31"), [F(2, 6, "y31"), F(1, 6, "y31"), F(2, 6, "y31"), F(2, 6, "x41"), F(2, 6, "y31"), F(2, 6, "y52"), F(2, 5, "y31")]),
    (F(2, 6, "y52"), [F(2, 6, "y52"), F(1, 6, "y52"), F(2, 6, "y52"), F(2, 6, "y53"), F(2, 6, "x44"), F(2, 6, "y31"), F(2, 6, "y52")]),
    (F(2, 6, "x44"), [F(2, 6, "x04"), F(1, 6, "x44"), F(2, 6, "x44"), F(2, 6, "x44"), F(2, 6, "y52"), F(2, 6, "x44"), F(2, 6, "x44")]),
    (F(2, 6, "x04"), [F(2, 6, "x44"), F(1, 6, "x04"), F(2, 6, "x04"), F(2, 6, "x04"), F(2, 6, "x04"), F(2, 6, "x04"), F(2, 6, "x04")]),
    (F(2, 6, "y53"), [F(2, 6, "y53"), F(1, 6, "y53"), F(3, 6, "y53"), F(2, 6, "y52"), F(2, 6, "y53"), F(2, 6, "x41"), F(2, 6, "y53")]),
    (F(3, 5, "x01"), [C(3, 5), F(3, 5, "x01"), F(2, 5, "x01"), CA0(4, 5), F(3, 5, "x41"), CA0(3, 4), F(3, 6, "x01")]),
    (F(3, 5, "x41"), [F(3, 5, "x41"), F(3, 5, "x41"), F(2, 5, "x41"), F(3, 5, "x41"), F(3, 5, "x01"), F(3, 5, "x41"), F(3, 6, "x41")]),
    (F(3, 6, "x01"), [C(3, 6), F(3, 6, "x01"), F(2, 6, "x01"), CA0(4, 6), F(3, 6, "x41"), F(3, 6, "x01"), F(3, 5, "x01")]),
    (F(3, 6, "x41"), [F(3, 6, "x41"), F(3, 6, "x41"), F(2, 6, "x41"), F(3, 6, "x41"), F(3, 6, "x01"), F(3, 6, "y53"), F(3, 5, "x41")]),
    (F(3, 6, "y53"), [F(3, 6, "y53"), F(3, 6, "y53"), F(2, 6, "y53"), F(3, 6, "y53"), F(3, 6, "y53"), F(3, 6, "x41"), F(3, 6, "y53")]),
];
