#include "rootcite/normalize.hpp"

#include <algorithm>

#include "rootcite/errors.hpp"
#include "rootcite/text.hpp"

namespace rootcite {

namespace {

// Fullwidth ASCII variants (U+FF01-FF5E) fold onto U+0021-007E;
// the ideographic space folds onto a plain space.
char32_t fold_fullwidth(char32_t cp) {
    if (cp >= 0xFF01 && cp <= 0xFF5E) return cp - 0xFEE0;
    if (cp == 0x3000) return U' ';
    return cp;
}

bool is_ascii_alnum(char32_t cp) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

}  // namespace

NormalizedRef normalize_reference(std::string_view raw) {
    if (raw.empty()) throw EmptyStringError();

    std::vector<char32_t> kept;
    bool pending_space = false;
    for (char32_t cp : utf8_codepoints(raw)) {
        cp = fold_fullwidth(cp);
        if (is_ascii_alnum(cp)) {
            if (cp >= 'A' && cp <= 'Z') cp += 'a' - 'A';
        } else if (!is_cjk_ideograph(cp)) {
            // Punctuation, whitespace and anything else becomes a separator.
            pending_space = !kept.empty();
            continue;
        }
        if (pending_space) {
            kept.push_back(U' ');
            pending_space = false;
        }
        kept.push_back(cp);
    }

    NormalizedRef out;
    out.norm = codepoints_to_utf8(kept);

    if (kept.size() < 3) {
        out.shingles.push_back(out.norm);
        return out;
    }
    out.shingles.reserve(kept.size() - 2);
    for (std::size_t i = 0; i + 3 <= kept.size(); ++i) {
        std::string gram;
        append_utf8(gram, kept[i]);
        append_utf8(gram, kept[i + 1]);
        append_utf8(gram, kept[i + 2]);
        out.shingles.push_back(std::move(gram));
    }
    std::sort(out.shingles.begin(), out.shingles.end());
    out.shingles.erase(std::unique(out.shingles.begin(), out.shingles.end()), out.shingles.end());
    return out;
}

}  // namespace rootcite
