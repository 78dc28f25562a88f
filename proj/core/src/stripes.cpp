// SPDX-License-Identifier: Apache-2.0
#include "chroma/stripes.hpp"

namespace chroma {

StripeScheduler::StripeScheduler(int start_row, std::optional<ColorExpr> odd,
                                 std::optional<ColorExpr> even,
                                 std::optional<std::string> boundary_command)
    : start_row_(start_row),
      odd_(std::move(odd)),
      even_(std::move(even)),
      command_(std::move(boundary_command)) {
    if (start_row < 1) throw EvalError("stripe start row must be >= 1");
}

RowPaint StripeScheduler::begin_row() {
    RowPaint paint;
    paint.row_number = ++row_counter_;
    const int n = row_counter_;
    if (pending_override_) {
        // An explicit row color wins, even while hidden.
        paint.color = std::move(*pending_override_);
        pending_override_.reset();
    } else if (!hidden_ && n >= start_row_) {
        paint.color = (n - start_row_) % 2 == 0 ? odd_ : even_;
    }
    if (command_ && n > start_row_) paint.commands.push_back(*command_);
    return paint;
}

void StripeScheduler::set_row_override(ColorExpr e) { pending_override_ = std::move(e); }

void StripeScheduler::hide() { hidden_ = true; }

void StripeScheduler::show() { hidden_ = false; }

std::optional<ColorExpr> cell_paint(const RowPaint& row,
                                    const std::optional<ColorExpr>& cell_override) {
    return cell_override ? cell_override : row.color;
}

}  // namespace chroma
