#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sentivec/cli.hpp"
#include "sentivec/compose.hpp"

using namespace sentivec;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Exit status and combined output of the installed binary, for end-to-end
// error contract checks.
std::pair<int, std::string> run_cli(const std::string& args) {
    const char* bin = std::getenv("SENTIVEC_CLI");
    REQUIRE(bin != nullptr);
    const std::string out_file = (fs::temp_directory_path() / "sentivec_cli_out.txt").string();
    const std::string cmd = std::string(bin) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    const std::string output = slurp(out_file);
    std::remove(out_file.c_str());
    return {WEXITSTATUS(status), output};
}

RunConfig base_config(const TempDir& dir) {
    RunConfig config;
    config.corpus_path = dir.file("corpus.tsv");
    config.out_dir = dir.file("out");
    config.folds = 4;
    config.dims = 4;
    return config;
}

void write_small_corpus(const std::string& path) {
    std::ostringstream ss;
    for (int i = 0; i < 10; ++i) {
        ss << "pos\tgood fine nice day fill" << i % 3 << "\n";
        ss << "neg\tbad awful sad day fill" << i % 3 << "\n";
    }
    write_file(path, ss.str());
}

}  // namespace

TEST_CASE("edit distance") {
    CHECK(edit_distance("", "") == 0);
    CHECK(edit_distance("abc", "abc") == 0);
    CHECK(edit_distance("kitten", "sitting") == 3);
    CHECK(edit_distance("a", "") == 1);
}

TEST_CASE("config validation reports missing inputs") {
    TempDir dir("sentivec_cli_val");
    RunConfig config = base_config(dir);
    write_small_corpus(config.corpus_path);
    CHECK_NOTHROW(config.validate());

    config.channels = {Variant::dict};
    CHECK_THROWS_WITH_AS(config.validate(), doctest::Contains("--dict"), std::runtime_error);

    config.channels = {Variant::external};
    CHECK_THROWS_WITH_AS(config.validate(), doctest::Contains("--external-emb"),
                         std::runtime_error);

    config.channels = {};
    CHECK_THROWS_AS(config.validate(), std::runtime_error);

    config = base_config(dir);
    write_small_corpus(config.corpus_path);
    config.three_feats = "sometimes";
    CHECK_THROWS_AS(config.validate(), std::runtime_error);
    config.three_feats = "both";
    config.folds = 1;
    CHECK_THROWS_AS(config.validate(), std::runtime_error);
}

TEST_CASE("config fingerprint tracks every field") {
    TempDir dir("sentivec_cli_fp");
    RunConfig a = base_config(dir);
    RunConfig b = a;
    CHECK(config_fingerprint(a) == config_fingerprint(b));
    b.seed = 2;
    CHECK(config_fingerprint(a) != config_fingerprint(b));
    b = a;
    b.window_size = 7;
    CHECK(config_fingerprint(a) != config_fingerprint(b));
    b = a;
    b.channels = {Variant::concat};
    CHECK(config_fingerprint(a) != config_fingerprint(b));
}

TEST_CASE("embed writes one file per channel plus the concatenation") {
    TempDir dir("sentivec_cli_embed");
    RunConfig config = base_config(dir);
    write_small_corpus(config.corpus_path);
    write_file(dir.file("dict.tsv"),
               "good\tpleasing agreeable\nbad\tunpleasant nasty\nday\ttime span\n");
    config.dictionary_path = dir.file("dict.tsv");
    config.channels = {Variant::corpus_svd, Variant::dict, Variant::four_scores};
    cmd_embed(config);

    const EmbeddingFile svd = read_embedding_file(config.out_dir + "/corpus-svd.emb");
    const EmbeddingFile dict = read_embedding_file(config.out_dir + "/dict.emb");
    const EmbeddingFile four = read_embedding_file(config.out_dir + "/4scores.emb");
    const EmbeddingFile concat = read_embedding_file(config.out_dir + "/concat.emb");
    CHECK(svd.vectors.cols() == 4);
    CHECK(dict.vectors.cols() == 4);
    CHECK(four.vectors.cols() == 4);
    CHECK(concat.vectors.cols() == 12);
    CHECK(svd.words == concat.words);

    // Sidecars carry one shared fingerprint.
    const std::string fp = slurp(config.out_dir + "/fingerprint.txt");
    CHECK(slurp(config.out_dir + "/corpus-svd.emb.meta").find(fp.substr(0, 16)) !=
          std::string::npos);
}

TEST_CASE("a single channel produces no concatenated file") {
    TempDir dir("sentivec_cli_one");
    RunConfig config = base_config(dir);
    write_small_corpus(config.corpus_path);
    config.channels = {Variant::corpus_svd};
    cmd_embed(config);
    CHECK(fs::exists(config.out_dir + "/corpus-svd.emb"));
    CHECK_FALSE(fs::exists(config.out_dir + "/concat.emb"));
}

TEST_CASE("neighbors ranks an exact duplicate first with similarity 1") {
    TempDir dir("sentivec_cli_nb");
    const std::string emb = dir.file("vectors.emb");
    write_file(emb,
               "4 2\n"
               "alpha 1 0\n"
               "double 2 0\n"
               "ortho 0 1\n"
               "anti -1 0\n");
    write_file(emb + ".meta", "fingerprint\tdeadbeefdeadbeef\n");

    const auto ranked = cmd_neighbors({emb}, "alpha", 10);
    REQUIRE(ranked.size() == 3);  // top_n clamps to V-1
    CHECK(ranked[0].rfind("double\t1.000000", 0) == 0);
    CHECK(ranked[1].rfind("ortho\t0.000000", 0) == 0);
    CHECK(ranked[2].rfind("anti\t-1.000000", 0) == 0);
}

TEST_CASE("neighbors rejects OOV queries with near misses") {
    TempDir dir("sentivec_cli_oov");
    const std::string emb = dir.file("vectors.emb");
    write_file(emb, "2 1\napple 1\nbanana 2\n");
    write_file(emb + ".meta", "fingerprint\t0000000000000000\n");
    CHECK_THROWS_WITH_AS(cmd_neighbors({emb}, "appel", 3), doctest::Contains("apple"),
                         std::runtime_error);
}

TEST_CASE("neighbors rejects mixed fingerprints and missing sidecars") {
    TempDir dir("sentivec_cli_mix");
    const std::string a = dir.file("a.emb");
    const std::string b = dir.file("b.emb");
    write_file(a, "2 1\nx 1\ny 2\n");
    write_file(b, "2 1\nx 3\ny 4\n");
    write_file(a + ".meta", "fingerprint\taaaaaaaaaaaaaaaa\n");
    write_file(b + ".meta", "fingerprint\tbbbbbbbbbbbbbbbb\n");
    CHECK_THROWS_WITH_AS(cmd_neighbors({a, b}, "x", 1), doctest::Contains("fingerprint"),
                         std::runtime_error);

    const std::string c = dir.file("c.emb");
    write_file(c, "2 1\nx 1\ny 2\n");
    CHECK_THROWS_WITH_AS(cmd_neighbors({c}, "x", 1), doctest::Contains("sidecar"),
                         std::runtime_error);
}

TEST_CASE("eval writes a grid over channels and 3-feats settings") {
    TempDir dir("sentivec_cli_eval");
    RunConfig config = base_config(dir);
    write_small_corpus(config.corpus_path);
    config.channels = {Variant::four_scores, Variant::corpus_svd};
    config.folds = 2;
    cmd_eval(config);

    const std::string raw = slurp(config.out_dir + "/eval_report.json");
    const nlohmann::json doc = nlohmann::json::parse(raw);
    CHECK(doc.contains("fingerprint"));
    REQUIRE(doc["grid"].size() == 4);  // 2 channels x {with, without}
    for (const auto& cell : doc["grid"]) {
        CHECK(cell["mean_accuracy"].get<double>() >= 0.0);
        CHECK(cell["mean_accuracy"].get<double>() <= 1.0);
        CHECK(cell["predictions"].size() == 20);
    }
}

TEST_CASE("gen-synthetic output loads as a balanced corpus") {
    TempDir dir("sentivec_cli_gen");
    SyntheticParams params;
    params.seed = 12;
    cmd_gen_synthetic(params, dir.file("c.tsv"), dir.file("d.tsv"));

    PipelineConfig cfg;
    const Corpus corpus = load_corpus(dir.file("c.tsv"), cfg);
    REQUIRE(corpus.documents.size() == 500);
    int pos = 0;
    for (const Document& d : corpus.documents) pos += d.label == Label::positive ? 1 : 0;
    CHECK(pos == 250);
    CHECK(corpus.vocabulary.size() == 50);

    const DefinitionLexicon dict = load_dictionary(dir.file("d.tsv"), cfg);
    CHECK(dict.definitions.size() == 50);
}

TEST_CASE("label shuffling keeps texts and counts, moves labels") {
    SyntheticParams params;
    params.seed = 12;
    const SyntheticCorpus plain = generate_synthetic(params);
    params.shuffle_labels = true;
    const SyntheticCorpus shuffled = generate_synthetic(params);
    REQUIRE(plain.corpus_lines.size() == shuffled.corpus_lines.size());

    int moved = 0;
    int pos = 0;
    for (size_t i = 0; i < plain.corpus_lines.size(); ++i) {
        const std::string& a = plain.corpus_lines[i];
        const std::string& b = shuffled.corpus_lines[i];
        CHECK(a.substr(a.find('\t')) == b.substr(b.find('\t')));  // same text
        if (a.substr(0, a.find('\t')) != b.substr(0, b.find('\t'))) ++moved;
        if (b.rfind("pos\t", 0) == 0) ++pos;
    }
    CHECK(moved > 100);  // the permutation actually moved labels
    CHECK(pos == 250);   // but class balance is preserved
}

TEST_CASE("binary reports errors on one line with a fixed prefix") {
    TempDir dir("sentivec_cli_bin");
    auto [status, output] = run_cli("eval --corpus " + dir.file("missing.tsv"));
    CHECK(status != 0);
    CHECK(output.rfind("error: ", 0) == 0);
    CHECK(output.find('\n') == output.size() - 1);  // single line

    auto [status2, output2] = run_cli("neighbors --emb " + dir.file("nope.emb") + " --query x");
    CHECK(status2 != 0);
    CHECK(output2.rfind("error: ", 0) == 0);

    auto [status3, output3] = run_cli("");
    CHECK(status3 != 0);
}

TEST_CASE("binary round-trips gen-synthetic into eval") {
    TempDir dir("sentivec_cli_rt");
    auto [status, output] = run_cli("gen-synthetic --docs 60 --markers 4 --fillers 8 --seed 3 --out " +
                                    dir.file("c.tsv") + " --dict-out " + dir.file("d.tsv"));
    REQUIRE(status == 0);
    auto [status2, output2] =
        run_cli("eval --corpus " + dir.file("c.tsv") + " --channels 4scores --three-feats on "
                "--folds 3 --out " + dir.file("out"));
    CHECK(status2 == 0);
    CHECK(output2.find("4scores") != std::string::npos);
    CHECK(fs::exists(dir.file("out") + "/eval_report.json"));
}

TEST_CASE("dict channel without a dictionary fails with remedy text") {
    TempDir dir("sentivec_cli_remedy");
    write_small_corpus(dir.file("c.tsv"));
    auto [status, output] =
        run_cli("eval --corpus " + dir.file("c.tsv") + " --channels dict --out " + dir.file("o"));
    CHECK(status != 0);
    CHECK(output.rfind("error: ", 0) == 0);
    CHECK(output.find("--dict") != std::string::npos);
}
