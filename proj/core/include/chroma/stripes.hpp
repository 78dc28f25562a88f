// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/expr.hpp"

namespace chroma {

// What one table row gets painted with. `color` is empty for rows before
// the start row and for hidden scheduled stripes; `commands` carries the
// configured boundary command tokens, passed through uninterpreted.
struct RowPaint {
    int row_number = 0;
    std::optional<ColorExpr> color;
    std::vector<std::string> commands;
};

// Alternating row-color state machine. Rows are counted by begin_row calls,
// including hidden rows and rows before the start row. A row override is
// one-shot and beats the hidden flag; hiding never changes the parity of
// later rows.
class StripeScheduler {
public:
    // Either stripe expression may be absent ("no color" for that parity).
    // Throws EvalError when start_row < 1.
    StripeScheduler(int start_row, std::optional<ColorExpr> odd, std::optional<ColorExpr> even,
                    std::optional<std::string> boundary_command = {});

    RowPaint begin_row();

    void set_row_override(ColorExpr e);  // applies to the next row only
    void hide();                         // suppress scheduled stripes
    void show();

    int rows_begun() const noexcept { return row_counter_; }
    bool hidden() const noexcept { return hidden_; }

private:
    int start_row_;
    std::optional<ColorExpr> odd_;
    std::optional<ColorExpr> even_;
    std::optional<std::string> command_;
    int row_counter_ = 0;
    bool hidden_ = false;
    std::optional<ColorExpr> pending_override_;
};

// Cell override beats the row paint.
std::optional<ColorExpr> cell_paint(const RowPaint& row,
                                    const std::optional<ColorExpr>& cell_override);

}  // namespace chroma
