#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>

#include "notibus/fsutil.hpp"
#include "notibus/value.hpp"

namespace notibus {

/// Named property sets: uniquely named typed values per set, with a
/// whole-set snapshot read. Sets are created implicitly on first define and
/// persisted as one canonical-encoding file per set under
/// `<data-dir>/props/`, rewritten atomically, so device characteristics
/// survive broker restarts.
class PropertyStore {
public:
    /// In-memory only (tests, embedded use).
    PropertyStore() = default;

    explicit PropertyStore(std::filesystem::path data_dir)
        : dir_(std::move(data_dir) / "props") {
        std::filesystem::create_directories(*dir_);
        for (const auto& entry : std::filesystem::directory_iterator(*dir_)) {
            if (!entry.is_regular_file()) continue;
            if (entry.path().extension() == ".tmp") continue;
            std::string set_id = decode_filename(entry.path().filename().string());
            auto content = read_file(entry.path());
            if (!content) continue;
            Value v = parse_text(*content);
            if (!v.is_map()) throw DecodeError(0, "property file is not a map");
            sets_[set_id] = v.as_map();
        }
    }

    void define_property(const std::string& set_id, const std::string& name, Value value) {
        if (name.empty()) throw Error(ErrorCode::InvalidName, "empty property name");
        std::lock_guard lock(mu_);
        Value::Map& set = sets_[set_id];
        set[name] = std::move(value);
        persist(set_id, set);
    }

    Value get_property(const std::string& set_id, const std::string& name) const {
        std::lock_guard lock(mu_);
        const Value::Map& set = set_at(set_id);
        auto it = set.find(name);
        if (it == set.end())
            throw Error(ErrorCode::NoSuchProperty, set_id + "." + name);
        return it->second;
    }

    /// Complete snapshot of the set, serializable with concurrent defines.
    Value::Map get_all(const std::string& set_id) const {
        std::lock_guard lock(mu_);
        return set_at(set_id);
    }

    void delete_property(const std::string& set_id, const std::string& name) {
        std::lock_guard lock(mu_);
        auto sit = sets_.find(set_id);
        if (sit == sets_.end()) throw Error(ErrorCode::NoSuchSet, set_id);
        if (sit->second.erase(name) == 0)
            throw Error(ErrorCode::NoSuchProperty, set_id + "." + name);
        persist(set_id, sit->second);
    }

    bool set_exists(const std::string& set_id) const {
        std::lock_guard lock(mu_);
        return sets_.contains(set_id);
    }

private:
    const Value::Map& set_at(const std::string& set_id) const {
        auto it = sets_.find(set_id);
        if (it == sets_.end()) throw Error(ErrorCode::NoSuchSet, set_id);
        return it->second;
    }

    void persist(const std::string& set_id, const Value::Map& set) {
        if (!dir_) return;
        write_file_atomic(*dir_ / encode_filename(set_id), to_text(Value(set)));
    }

    mutable std::mutex mu_;
    std::map<std::string, Value::Map> sets_;
    std::optional<std::filesystem::path> dir_;
};

}  // namespace notibus
