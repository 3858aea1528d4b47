#pragma once

// Dollar Game and Gonality Game sessions, the engine adversary and the
// in-memory session store behind the HTTP service.

#include <chipfire/json_io.hpp>

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <thread>
#include <utility>

namespace chipfire::game {

enum class Kind { dollar, gonality };
enum class Phase { placing, sabotage, firing, won, lost };
enum class Adversary { engine, player };

std::string to_string(Kind k);
std::string to_string(Phase p);
std::string to_string(Adversary a);

// A call that is not allowed in the current phase.
struct PhaseError : std::logic_error {
    PhaseError(const std::string& what, Phase phase) : std::logic_error(what), phase(phase) {}
    Phase phase;
};

struct Move {
    enum class Type { place, debt, fire, resign } type;
    std::vector<Chips> chips; // place
    Vertex vertex = -1;       // debt
    VertexSet set;            // fire
    bool by_engine = false;   // debt
};

struct AdversaryChoice {
    Vertex vertex;
    bool unwinnable;
};

// Tries every vertex with Dhar and keeps the first whose debt cannot be
// cleared; otherwise the first vertex without chips (or vertex 0).
// Returns nullopt if stopped.
std::optional<AdversaryChoice> choose_debt(const Divisor& placement, std::stop_token stop = {});

struct Hint {
    VertexSet set;
    std::string reason; // "clear_debt" or "unburned"
    std::optional<BurnOutcome> burn;
};

class Session {
public:
    static Session gonality_game(GraphPtr g, Chips budget, Adversary adversary = Adversary::engine);
    static Session dollar_game(Divisor start);

    Kind kind() const noexcept { return kind_; }
    Phase phase() const noexcept { return phase_; }
    Adversary adversary() const noexcept { return adversary_; }
    Chips budget() const noexcept { return budget_; }
    const Divisor& divisor() const noexcept { return current_; }
    const Divisor& initial() const noexcept { return initial_; }
    const std::vector<Move>& log() const noexcept { return log_; }
    const GraphPtr& graph() const noexcept { return current_.graph_ptr(); }

    // Player A's placement: effective, degree exactly the chip budget.
    void place(const std::vector<Chips>& chips);
    // Player B (or the engine) puts one chip of debt on v.
    void place_debt(Vertex v, bool by_engine = false);
    // Runs choose_debt and applies it; false when stopped.
    bool run_engine_adversary(std::stop_token stop = {});
    void fire(const VertexSet& s);
    void resign();

    // Next set to fire: the debt-clearing set while debt sits on several
    // vertices, then the unburned set of a burn from the debt vertex.
    Hint hint() const;

    io::json to_json() const;
    // Rebuilds a session from to_json() output by replaying its log.
    static Session replay(const io::json& j);

private:
    Session(Kind kind, Divisor start, Chips budget, Adversary adversary);
    void require_phase(Phase p, const char* action) const;
    void settle(); // won if debt-free, lost if provably unwinnable

    Kind kind_;
    Phase phase_;
    Adversary adversary_;
    Chips budget_;
    Divisor initial_;
    Divisor current_;
    std::vector<Move> log_;
};

io::json move_to_json(const Move& m);

// Graphs above this size get their adversary sweep in a background job.
inline constexpr std::size_t kSyncAdversaryVertices = 20;

class SessionStore {
public:
    explicit SessionStore(std::optional<std::filesystem::path> log_dir = std::nullopt);
    ~SessionStore();

    SessionStore(const SessionStore&) = delete;
    SessionStore& operator=(const SessionStore&) = delete;

    std::string create(Session s);
    bool erase(const std::string& id);

    // Runs f on the session under its lock; returns false for an unknown id.
    // After f, a pending engine move is made (or scheduled) and the log
    // persisted; then view sees the settled state, still under the lock.
    template <class F, class V>
    bool with_session(const std::string& id, F&& f, V&& view)
    {
        std::shared_ptr<Entry> e = find(id);
        if (!e)
            return false;
        std::lock_guard lock(e->mutex);
        f(e->session);
        after_mutation(id, *e);
        view(std::as_const(e->session), e->job_running.load());
        return true;
    }

    template <class F>
    bool with_session(const std::string& id, F&& f)
    {
        return with_session(id, std::forward<F>(f), [](const Session&, bool) {});
    }

private:
    struct Entry {
        explicit Entry(Session s) : session(std::move(s)) {}
        std::mutex mutex;
        Session session;
        std::atomic<bool> job_running{false};
        std::jthread job;
    };

    std::shared_ptr<Entry> find(const std::string& id);
    void after_mutation(const std::string& id, Entry& e); // e.mutex held
    void persist(const std::string& id, const Session& s);

    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::optional<std::filesystem::path> log_dir_;
};

} // namespace chipfire::game
