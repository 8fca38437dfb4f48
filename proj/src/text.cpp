#include "rootcite/text.hpp"

#include "rootcite/errors.hpp"

namespace rootcite {

std::string_view language_code(Language lang) {
    return lang == Language::Chinese ? "zh" : "en";
}

std::optional<Language> language_from_code(std::string_view code) {
    if (code == "zh") return Language::Chinese;
    if (code == "en") return Language::English;
    return std::nullopt;
}

std::vector<char32_t> utf8_codepoints(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    const auto n = text.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(text[i]);
        std::size_t len;
        char32_t cp;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            out.push_back(0xFFFD);
            ++i;
            continue;
        }
        if (i + len > n) {
            out.push_back(0xFFFD);
            ++i;
            continue;
        }
        bool ok = true;
        for (std::size_t k = 1; k < len; ++k) {
            const auto bk = static_cast<unsigned char>(text[i + k]);
            if ((bk & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (bk & 0x3F);
        }
        // Reject overlong forms, surrogates and out-of-range values.
        if (ok) {
            if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
                (cp >= 0xD800 && cp <= 0xDFFF)) {
                ok = false;
            }
        }
        if (!ok) {
            out.push_back(0xFFFD);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string codepoints_to_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size() * 3);
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

bool is_cjk_ideograph(char32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF);
}

bool is_cjk_for_language(char32_t cp) {
    return is_cjk_ideograph(cp) || (cp >= 0x3000 && cp <= 0x303F);
}

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// U+3000 encodes as E3 80 80.
bool starts_with_ideographic_space(std::string_view s) {
    return s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xE3 &&
           static_cast<unsigned char>(s[1]) == 0x80 &&
           static_cast<unsigned char>(s[2]) == 0x80;
}

}  // namespace

std::string_view trim(std::string_view s) {
    for (;;) {
        if (!s.empty() && is_ascii_space(s.front())) {
            s.remove_prefix(1);
        } else if (starts_with_ideographic_space(s)) {
            s.remove_prefix(3);
        } else {
            break;
        }
    }
    for (;;) {
        if (!s.empty() && is_ascii_space(s.back())) {
            s.remove_suffix(1);
        } else if (s.size() >= 3 && starts_with_ideographic_space(s.substr(s.size() - 3))) {
            s.remove_suffix(3);
        } else {
            break;
        }
    }
    return s;
}

namespace {

std::optional<int> scan_year(std::string_view raw, bool keep_last) {
    std::optional<int> found;
    std::size_t i = 0;
    const auto n = raw.size();
    while (i < n) {
        if (raw[i] < '0' || raw[i] > '9') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && raw[j] >= '0' && raw[j] <= '9') ++j;
        if (j - i == 4) {
            const int value = (raw[i] - '0') * 1000 + (raw[i + 1] - '0') * 100 +
                              (raw[i + 2] - '0') * 10 + (raw[i + 3] - '0');
            if (value >= kMinYear && value <= kMaxYear) {
                found = value;
                if (!keep_last) return found;
            }
        }
        i = j;
    }
    return found;
}

}  // namespace

std::optional<int> extract_year(std::string_view raw) {
    return scan_year(raw, /*keep_last=*/true);
}

std::optional<int> extract_first_year(std::string_view raw) {
    return scan_year(raw, /*keep_last=*/false);
}

Language classify_language(std::string_view raw) {
    if (trim(raw).empty()) throw EmptyStringError();
    for (char32_t cp : utf8_codepoints(raw)) {
        if (is_cjk_for_language(cp)) return Language::Chinese;
    }
    return Language::English;
}

std::vector<std::string> split_fields(std::string_view value, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        auto end = value.find(sep, start);
        if (end == std::string_view::npos) end = value.size();
        const auto piece = trim(value.substr(start, end - start));
        if (!piece.empty()) out.emplace_back(piece);
        if (end == value.size()) break;
        start = end + 1;
    }
    return out;
}

}  // namespace rootcite
