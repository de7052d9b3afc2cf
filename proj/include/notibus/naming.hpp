#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "notibus/errors.hpp"

namespace notibus {

/// Opaque locator for a broker-hosted object, the piece of state a name
/// binds to.
struct ServiceRef {
    enum class Kind { ChannelFactory, Channel, Log, PropertySet, NamingContext };
    Kind kind = Kind::Channel;
    std::string id;

    bool operator==(const ServiceRef&) const = default;
};

inline std::string_view to_string(ServiceRef::Kind k) {
    switch (k) {
        case ServiceRef::Kind::ChannelFactory: return "channel_factory";
        case ServiceRef::Kind::Channel: return "channel";
        case ServiceRef::Kind::Log: return "log";
        case ServiceRef::Kind::PropertySet: return "property_set";
        case ServiceRef::Kind::NamingContext: return "naming_context";
    }
    return "?";
}

inline ServiceRef::Kind service_kind_from_string(std::string_view s) {
    if (s == "channel_factory") return ServiceRef::Kind::ChannelFactory;
    if (s == "channel") return ServiceRef::Kind::Channel;
    if (s == "log") return ServiceRef::Kind::Log;
    if (s == "property_set") return ServiceRef::Kind::PropertySet;
    if (s == "naming_context") return ServiceRef::Kind::NamingContext;
    throw Error(ErrorCode::BadRequest, "unknown service kind '" + std::string(s) + "'");
}

/// Hierarchical path of non-empty components. "/" is reserved as the
/// textual separator and may not appear inside a component.
struct Name {
    std::vector<std::string> components;

    static Name parse(std::string_view text) {
        Name n;
        std::size_t start = 0;
        while (true) {
            std::size_t sep = text.find('/', start);
            std::string_view comp = text.substr(start, sep == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : sep - start);
            if (comp.empty()) throw Error(ErrorCode::InvalidName, "empty name component");
            n.components.emplace_back(comp);
            if (sep == std::string_view::npos) break;
            start = sep + 1;
        }
        return n;
    }

    std::string text() const {
        std::string out;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (i) out += '/';
            out += components[i];
        }
        return out;
    }

    bool operator==(const Name&) const = default;
};

enum class BindingKind { Object, Context };

struct BindingInfo {
    std::string component;
    BindingKind kind;

    bool operator==(const BindingInfo&) const = default;
};

struct ResolveResult {
    ServiceRef ref;       // synthesized {NamingContext, path} for contexts
    bool is_context = false;
};

/// In-memory hierarchical name directory. Each component is bound at most
/// once within a context; aliasing the same ref under several names is
/// fine. All operations are atomic and serializable.
class NamingService {
public:
    void bind(const Name& n, const ServiceRef& ref) {
        std::lock_guard lock(mu_);
        Node& parent = parent_of(n);
        const std::string& leaf = n.components.back();
        if (parent.children.contains(leaf))
            throw Error(ErrorCode::AlreadyBound, n.text());
        parent.children.emplace(leaf, Node{ref});
    }

    /// Replace-or-create. Context bindings cannot be replaced.
    void rebind(const Name& n, const ServiceRef& ref) {
        std::lock_guard lock(mu_);
        Node& parent = parent_of(n);
        const std::string& leaf = n.components.back();
        auto it = parent.children.find(leaf);
        if (it == parent.children.end()) {
            parent.children.emplace(leaf, Node{ref});
            return;
        }
        if (it->second.is_context())
            throw Error(ErrorCode::CannotRebindContext, n.text());
        it->second.ref = ref;
    }

    ResolveResult resolve(const Name& n) const {
        std::lock_guard lock(mu_);
        validate(n);
        const Node* node = &root_;
        for (const std::string& comp : n.components) {
            if (!node->is_context()) throw Error(ErrorCode::NotFound, n.text());
            auto it = node->children.find(comp);
            if (it == node->children.end()) throw Error(ErrorCode::NotFound, n.text());
            node = &it->second;
        }
        if (node->is_context())
            return {ServiceRef{ServiceRef::Kind::NamingContext, n.text()}, true};
        return {node->ref, false};
    }

    /// Contexts can be unbound only when empty.
    void unbind(const Name& n) {
        std::lock_guard lock(mu_);
        Node& parent = parent_of(n);
        const std::string& leaf = n.components.back();
        auto it = parent.children.find(leaf);
        if (it == parent.children.end()) throw Error(ErrorCode::NotFound, n.text());
        if (it->second.is_context() && !it->second.children.empty())
            throw Error(ErrorCode::ContextNotEmpty, n.text());
        parent.children.erase(it);
    }

    /// Direct bindings of a context (or of the root when `n` is empty),
    /// sorted by component byte order.
    std::vector<BindingInfo> list(const std::vector<std::string>& context_path) const {
        std::lock_guard lock(mu_);
        const Node* node = &root_;
        std::string seen;
        for (const std::string& comp : context_path) {
            if (comp.empty() || comp.find('/') != std::string::npos)
                throw Error(ErrorCode::InvalidName, comp);
            if (!node->is_context()) throw Error(ErrorCode::NotAContext, seen);
            auto it = node->children.find(comp);
            if (it == node->children.end()) throw Error(ErrorCode::NotFound, comp);
            node = &it->second;
            seen += seen.empty() ? comp : "/" + comp;
        }
        if (!node->is_context()) throw Error(ErrorCode::NotAContext, seen);
        std::vector<BindingInfo> out;
        out.reserve(node->children.size());
        for (const auto& [comp, child] : node->children)
            out.push_back({comp, child.is_context() ? BindingKind::Context : BindingKind::Object});
        return out;
    }

    void bind_new_context(const Name& n) {
        std::lock_guard lock(mu_);
        Node& parent = parent_of(n);
        const std::string& leaf = n.components.back();
        if (parent.children.contains(leaf))
            throw Error(ErrorCode::AlreadyBound, n.text());
        parent.children.emplace(leaf, Node::context());
    }

private:
    struct Node {
        ServiceRef ref;
        std::map<std::string, Node> children;
        bool context = false;

        bool is_context() const { return context; }
        static Node context() { return Node{{}, {}, true}; }
    };

    static void validate(const Name& n) {
        if (n.components.empty()) throw Error(ErrorCode::InvalidName, "empty name");
        for (const std::string& c : n.components) {
            if (c.empty()) throw Error(ErrorCode::InvalidName, "empty name component");
            if (c.find('/') != std::string::npos)
                throw Error(ErrorCode::InvalidName, "'/' in name component");
        }
    }

    // Walks to the parent context of n's leaf. Missing or non-context
    // ancestors raise MissingContext.
    Node& parent_of(const Name& n) {
        validate(n);
        Node* node = &root_;
        for (std::size_t i = 0; i + 1 < n.components.size(); ++i) {
            auto it = node->children.find(n.components[i]);
            if (it == node->children.end() || !it->second.is_context())
                throw Error(ErrorCode::MissingContext, n.text());
            node = &it->second;
        }
        return *node;
    }

    mutable std::mutex mu_;
    Node root_ = Node::context();
};

}  // namespace notibus
