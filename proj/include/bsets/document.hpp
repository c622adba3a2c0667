#pragma once

// Line-oriented key/value report with nested blocks. Field order is
// insertion order, so identical runs print identical bytes.
//
//   kind: analyze
//   verdict: not_basic
//   closed_array:
//     point: 0 0
//     point: 1 0
//   g:
//     0 -> 1/2

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bsets {

class Document {
public:
    struct Entry {
        std::string key;
        std::string value;
        std::vector<Entry> children;
        bool is_block = false;
        bool is_line = false; // bare text, no key
    };

    Document& set(std::string key, std::string value)
    {
        entries_.push_back({std::move(key), std::move(value), {}, false});
        return *this;
    }

    Document& set(std::string key, const char* value) { return set(std::move(key), std::string(value)); }
    Document& set(std::string key, bool value) { return set(std::move(key), value ? "true" : "false"); }

    template <class Int, class = std::enable_if_t<std::is_integral_v<Int>>>
    Document& set(std::string key, Int value)
    {
        return set(std::move(key), std::to_string(value));
    }

    // Appends a nested block and returns a handle to fill it.
    class Block {
    public:
        explicit Block(std::vector<Entry>* into) : into_(into) {}

        Block& set(std::string key, std::string value)
        {
            into_->push_back({std::move(key), std::move(value), {}, false});
            return *this;
        }
        Block& set(std::string key, const char* value) { return set(std::move(key), std::string(value)); }
        Block& set(std::string key, bool value) { return set(std::move(key), value ? "true" : "false"); }
        template <class Int, class = std::enable_if_t<std::is_integral_v<Int>>>
        Block& set(std::string key, Int value)
        {
            return set(std::move(key), std::to_string(value));
        }

        Block block(std::string key)
        {
            into_->push_back({std::move(key), {}, {}, true});
            return Block(&into_->back().children);
        }

        Block& line(std::string text)
        {
            into_->push_back({{}, std::move(text), {}, false, true});
            return *this;
        }

    private:
        std::vector<Entry>* into_;
    };

    // Blocks must be filled before the next entry is added at this level.
    Block block(std::string key)
    {
        entries_.push_back({std::move(key), {}, {}, true});
        return Block(&entries_.back().children);
    }

    const std::vector<Entry>& entries() const { return entries_; }

    void write_structured(std::ostream& out) const { write(out, entries_, 0, false); }
    void write_human(std::ostream& out) const { write(out, entries_, 0, true); }

private:
    static void write(std::ostream& out, const std::vector<Entry>& es, int depth, bool human)
    {
        for (const auto& e : es) {
            out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
            if (e.is_line) {
                out << e.value << '\n';
                continue;
            }
            out << (human ? humanize(e.key) : e.key) << ':';
            if (e.is_block) {
                out << '\n';
                write(out, e.children, depth + 1, human);
            } else {
                out << ' ' << e.value << '\n';
            }
        }
    }

    static std::string humanize(std::string key)
    {
        for (auto& c : key)
            if (c == '_')
                c = ' ';
        if (!key.empty() && key[0] >= 'a' && key[0] <= 'z')
            key[0] = static_cast<char>(key[0] - 'a' + 'A');
        return key;
    }

    std::vector<Entry> entries_;
};

} // namespace bsets
