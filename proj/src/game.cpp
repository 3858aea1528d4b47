#include <chipfire/game.hpp>

#include <chipfire/detail/kernel.hpp>

#include <fstream>
#include <random>
#include <sstream>

namespace chipfire::game {

std::string to_string(Kind k)
{
    return k == Kind::dollar ? "dollar" : "gonality";
}

std::string to_string(Phase p)
{
    switch (p) {
    case Phase::placing: return "placing";
    case Phase::sabotage: return "sabotage";
    case Phase::firing: return "firing";
    case Phase::won: return "won";
    case Phase::lost: return "lost";
    }
    return "?";
}

std::string to_string(Adversary a)
{
    return a == Adversary::engine ? "engine" : "player";
}

std::optional<AdversaryChoice> choose_debt(const Divisor& placement, std::stop_token stop)
{
    const Multigraph& g = placement.graph();
    detail::Kernel k(g);
    std::vector<Chips> chips = placement.values();
    std::optional<Vertex> fallback;
    for (std::size_t v = 0; v < chips.size(); ++v) {
        if (stop.stop_requested())
            return std::nullopt;
        if (chips[v] > 0)
            continue; // debt there is paid on the spot
        if (!fallback)
            fallback = static_cast<Vertex>(v);
        chips[v] -= 1;
        bool winnable = k.winnable(chips);
        chips[v] += 1;
        if (!winnable)
            return AdversaryChoice{static_cast<Vertex>(v), true};
    }
    return AdversaryChoice{fallback.value_or(0), false};
}

Session::Session(Kind kind, Divisor start, Chips budget, Adversary adversary)
    : kind_(kind), phase_(kind == Kind::dollar ? Phase::firing : Phase::placing), adversary_(adversary),
      budget_(budget), initial_(start), current_(std::move(start))
{
}

Session Session::gonality_game(GraphPtr g, Chips budget, Adversary adversary)
{
    if (budget < 0)
        throw std::invalid_argument("chip budget must be nonnegative");
    if (!is_connected(*g))
        throw std::invalid_argument("games need a connected graph");
    return Session(Kind::gonality, Divisor::zero(std::move(g)), budget, adversary);
}

Session Session::dollar_game(Divisor start)
{
    if (!is_connected(start.graph()))
        throw std::invalid_argument("games need a connected graph");
    Chips degree = start.degree();
    Session s(Kind::dollar, std::move(start), degree, Adversary::player);
    s.settle();
    return s;
}

void Session::require_phase(Phase p, const char* action) const
{
    if (phase_ != p)
        throw PhaseError(std::string(action) + " is not allowed in phase " + to_string(phase_), phase_);
}

void Session::settle()
{
    if (current_.is_effective())
        phase_ = Phase::won;
    else if (!dollar_game_winnable(current_))
        phase_ = Phase::lost;
}

void Session::place(const std::vector<Chips>& chips)
{
    require_phase(Phase::placing, "placing chips");
    Divisor d(current_.graph_ptr(), chips);
    if (!d.is_effective())
        throw std::invalid_argument("Player A places nonnegative chip counts only");
    if (d.degree() != budget_)
        throw std::invalid_argument("placement has " + std::to_string(d.degree()) + " chips, budget is " +
                                    std::to_string(budget_));
    current_ = std::move(d);
    log_.push_back({Move::Type::place, chips, -1, {}, false});
    phase_ = Phase::sabotage;
}

void Session::place_debt(Vertex v, bool by_engine)
{
    require_phase(Phase::sabotage, "placing debt");
    if (!current_.graph().contains(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    current_ = current_.with_added(v, -1);
    log_.push_back({Move::Type::debt, {}, v, {}, by_engine});
    phase_ = Phase::firing;
    settle();
}

bool Session::run_engine_adversary(std::stop_token stop)
{
    require_phase(Phase::sabotage, "the engine adversary");
    auto choice = choose_debt(current_, stop);
    if (!choice)
        return false;
    place_debt(choice->vertex, true);
    return true;
}

void Session::fire(const VertexSet& s)
{
    require_phase(Phase::firing, "firing");
    if (s.empty())
        throw std::invalid_argument("fire at least one vertex");
    VertexSet set = normalized(s);
    current_ = fire_set(current_, set);
    log_.push_back({Move::Type::fire, {}, -1, set, false});
    if (current_.is_effective())
        phase_ = Phase::won;
}

void Session::resign()
{
    if (phase_ == Phase::won || phase_ == Phase::lost)
        throw PhaseError("the game is already over", phase_);
    log_.push_back({Move::Type::resign, {}, -1, {}, false});
    phase_ = Phase::lost;
}

Hint Session::hint() const
{
    require_phase(Phase::firing, "a hint");
    const Multigraph& g = current_.graph();
    Vertex q = 0;
    std::size_t in_debt = 0;
    for (std::size_t v = 0; v < current_.size(); ++v)
        if (current_.values()[v] < 0) {
            ++in_debt;
            if (current_.values()[v] < current_.values()[q])
                q = static_cast<Vertex>(v);
        }
    detail::Kernel k(g);
    if (in_debt > 1) {
        std::vector<Chips> chips = current_.values();
        detail::FiringTrace trace;
        k.clear_debt_off(chips, q, &trace);
        if (!trace.steps.empty())
            return {trace.steps.front().first, "clear_debt", std::nullopt};
    }
    BurnOutcome b = burn(current_, q);
    return {b.unburned, "unburned", b};
}

io::json move_to_json(const Move& m)
{
    switch (m.type) {
    case Move::Type::place: return {{"type", "place"}, {"chips", m.chips}};
    case Move::Type::debt: return {{"type", "debt"}, {"vertex", m.vertex}, {"by", m.by_engine ? "engine" : "player"}};
    case Move::Type::fire: return {{"type", "fire"}, {"set", m.set}};
    case Move::Type::resign: return {{"type", "resign"}};
    }
    return {};
}

io::json Session::to_json() const
{
    io::json log = io::json::array();
    for (const Move& m : log_)
        log.push_back(move_to_json(m));
    return {{"kind", to_string(kind_)},
            {"phase", to_string(phase_)},
            {"adversary", to_string(adversary_)},
            {"budget", budget_},
            {"graph", io::graph_to_json(current_.graph())},
            {"initial", io::divisor_to_json(initial_)},
            {"divisor", io::divisor_to_json(current_)},
            {"log", std::move(log)}};
}

Session Session::replay(const io::json& j)
{
    GraphPtr g = share(io::graph_from_json(j.at("graph")));
    const std::string kind = j.at("kind").get<std::string>();
    Session s = kind == "dollar"
                    ? dollar_game(io::divisor_from_json(j.at("initial"), g))
                    : gonality_game(g, j.at("budget").get<Chips>(),
                                    j.at("adversary").get<std::string>() == "engine" ? Adversary::engine
                                                                                     : Adversary::player);
    for (const io::json& m : j.at("log")) {
        const std::string type = m.at("type").get<std::string>();
        if (type == "place")
            s.place(m.at("chips").get<std::vector<Chips>>());
        else if (type == "debt")
            s.place_debt(m.at("vertex").get<Vertex>(), m.at("by").get<std::string>() == "engine");
        else if (type == "fire")
            s.fire(m.at("set").get<VertexSet>());
        else if (type == "resign")
            s.resign();
        else
            throw io::JsonFormatError("unknown move type " + type);
    }
    return s;
}

// --- store ------------------------------------------------------------------

SessionStore::SessionStore(std::optional<std::filesystem::path> log_dir) : log_dir_(std::move(log_dir))
{
    if (log_dir_)
        std::filesystem::create_directories(*log_dir_);
}

SessionStore::~SessionStore()
{
    std::map<std::string, std::shared_ptr<Entry>> all;
    {
        std::lock_guard lock(mutex_);
        all.swap(sessions_);
    }
    for (auto& [id, e] : all) {
        e->job.request_stop();
        if (e->job.joinable())
            e->job.join();
    }
}

std::string SessionStore::create(Session s)
{
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    auto e = std::make_shared<Entry>(std::move(s));
    std::string id;
    {
        std::lock_guard lock(mutex_);
        do {
            std::ostringstream os;
            os << std::hex << rng();
            id = os.str();
        } while (sessions_.count(id));
        sessions_.emplace(id, e);
    }
    std::lock_guard lock(e->mutex);
    after_mutation(id, *e);
    return id;
}

bool SessionStore::erase(const std::string& id)
{
    std::shared_ptr<Entry> e;
    {
        std::lock_guard lock(mutex_);
        auto it = sessions_.find(id);
        if (it == sessions_.end())
            return false;
        e = std::move(it->second);
        sessions_.erase(it);
    }
    e->job.request_stop();
    if (e->job.joinable())
        e->job.join();
    return true;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id)
{
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

void SessionStore::after_mutation(const std::string& id, Entry& e)
{
    Session& s = e.session;
    if (s.phase() == Phase::sabotage && s.adversary() == Adversary::engine && !e.job_running) {
        if (s.graph()->vertex_count() <= kSyncAdversaryVertices) {
            s.run_engine_adversary();
        } else {
            // The previous job, if any, has finished: job_running is only
            // cleared at the very end of a job.
            if (e.job.joinable())
                e.job.join();
            e.job_running = true;
            Entry* entry = &e;
            Divisor placement = s.divisor();
            e.job = std::jthread([this, entry, id, placement](std::stop_token stop) {
                auto choice = choose_debt(placement, stop);
                std::lock_guard lock(entry->mutex);
                if (choice && !stop.stop_requested() && entry->session.phase() == Phase::sabotage) {
                    entry->session.place_debt(choice->vertex, true);
                    persist(id, entry->session);
                }
                entry->job_running = false;
            });
        }
    }
    persist(id, s);
}

void SessionStore::persist(const std::string& id, const Session& s)
{
    if (!log_dir_)
        return;
    std::ofstream out(*log_dir_ / (id + ".json"));
    out << s.to_json().dump(2) << '\n';
}

} // namespace chipfire::game
