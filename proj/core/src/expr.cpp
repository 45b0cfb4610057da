#include "lincount/expr.hpp"

#include <cctype>

#include "lincount/error.hpp"

namespace lincount {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorCode::ParseError,
                    msg + " at position " + std::to_string(pos) + " in '" + text + "'");
    }
    long long number() {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoll(text.substr(start, pos - start));
    }
};

}  // namespace

std::vector<ExprFactor> parse_schubert_expr(const std::string& text) {
    std::vector<ExprFactor> factors;
    Cursor c{text};
    bool expect_factor = true;
    while (!c.done()) {
        if (!expect_factor) {
            if (c.peek() != '*') c.fail("expected '*' between factors");
            ++c.pos;
            expect_factor = true;
            continue;
        }
        if (c.peek() != 's') c.fail("expected a factor 's[...]'");
        ++c.pos;
        c.skip_ws();
        if (c.done() || c.peek() != '[') c.fail("expected '[' after 's'");
        ++c.pos;
        std::string inner;
        while (c.pos < c.text.size() && c.text[c.pos] != ']') inner += c.text[c.pos++];
        if (c.pos >= c.text.size()) c.fail("unterminated '['");
        ++c.pos;  // consume ']'
        ExprFactor factor;
        factor.lambda = parse_partition(inner);
        c.skip_ws();
        if (c.pos < c.text.size() && c.text[c.pos] == '^') {
            ++c.pos;
            c.skip_ws();
            factor.power = c.number();
        }
        factors.push_back(std::move(factor));
        expect_factor = false;
    }
    if (expect_factor)
        throw Error(ErrorCode::ParseError, "empty or dangling expression: '" + text + "'");
    return factors;
}

CohomologyClass eval_schubert_expr(const std::string& text, const BoxShape& box) {
    CohomologyClass acc = CohomologyClass::unit(box);
    for (const auto& factor : parse_schubert_expr(text)) {
        CohomologyClass base = CohomologyClass::schubert(box, factor.lambda);
        for (long long i = 0; i < factor.power; ++i) acc = lr_multiply(acc, base);
    }
    return acc;
}

}  // namespace lincount
