// tools/voxkit_main.cpp  --  command-line front end: transcribe, analyze,
// evaluate, train-lm, train-am
//
// Copyright 2026  Voxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "voxkit/voxkit.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitData = 2;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<fs::path> sorted_files(const fs::path& dir, const std::string& ext) {
  if (!fs::is_directory(dir))
    throw voxkit::IoError("not a directory: " + dir.string());
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ext)
      out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

voxkit::AudioBuffer load_audio(const fs::path& path, int rate) {
  std::string ext = path.extension().string();
  if (ext == ".wav") return voxkit::load_wav(path.string(), rate);
  if (ext == ".raw") return voxkit::load_raw(path.string(), rate);
  throw voxkit::IoError("unsupported audio extension '" + ext + "': " +
                        path.string());
}

std::vector<std::vector<std::string>> corpus_sentences(const fs::path& path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path))
    files = sorted_files(path, ".txt");
  else
    files = {path};
  if (files.empty()) throw voxkit::Error("no .txt files in " + path.string());
  std::vector<std::vector<std::string>> sentences;
  for (const auto& f : files)
    for (const auto& line : voxkit::read_lines(f.string())) {
      std::vector<std::string> words =
          voxkit::split_fields(voxkit::to_lower(line));
      if (!words.empty()) sentences.push_back(std::move(words));
    }
  if (sentences.empty()) throw voxkit::Error("corpus has no sentences");
  return sentences;
}

// ---------------------------------------------------------------------------
// transcribe

struct TranscribeArgs {
  std::vector<std::string> audio;
  std::string am_path, lm_path, dict_path, out_dir = ".";
  int rate = 16000;
  double silence_db = -35.0, min_silence = 0.3, min_utterance = 0.2;
  bool no_split = false, no_silence_loop = false, no_cmn = false;
  bool dump_lattice = false, dump_features = false;
  std::string dump_graph;
  double beam = 16.0, acoustic_scale = 0.1, lattice_beam = 8.0;
  double silence_penalty = -2.302585092994046;
  bool skip_missing_words = false;
  int workers = 1;
  double frame_length = 0.025, frame_shift = 0.010;
  int num_filters = 26;
};

int run_transcribe(const TranscribeArgs& a) {
  voxkit::AcousticModelSet models = voxkit::load_model_set(a.am_path);
  voxkit::ArpaModel lm = voxkit::load_arpa(a.lm_path);
  std::set<std::string> phone_set;
  for (const auto& [name, _] : models.phones) phone_set.insert(name);
  voxkit::Lexicon lex = voxkit::load_dict(a.dict_path, phone_set);

  voxkit::GraphOptions gopt;
  gopt.optional_silence = !a.no_silence_loop;
  gopt.silence_penalty = a.silence_penalty;
  gopt.skip_missing_words = a.skip_missing_words;
  voxkit::DecodingGraph graph = voxkit::build_graph(lex, lm, models, gopt);
  for (const auto& w : graph.warnings) std::cerr << "warning: " << w << "\n";
  if (!a.dump_graph.empty()) {
    std::ofstream os(a.dump_graph);
    if (!os) throw voxkit::IoError("cannot write " + a.dump_graph);
    voxkit::write_graph(graph, os);
  }

  voxkit::FrameConfig fc;
  fc.frame_length = a.frame_length;
  fc.frame_shift = a.frame_shift;
  fc.cepstral_mean_norm = !a.no_cmn;
  voxkit::MelFilterbank fb = voxkit::MelFilterbank::make(
      a.num_filters, fc.effective_fft_size(a.rate), a.rate);
  voxkit::DecodeOptions dopt;
  dopt.beam = a.beam;
  dopt.acoustic_scale = a.acoustic_scale;
  dopt.lattice_beam = a.lattice_beam;

  fs::create_directories(a.out_dir);

  struct Job {
    size_t file_index;
    size_t utt_index;
    voxkit::AudioBuffer buffer;
    std::string text;
    voxkit::Lattice lattice;
    std::string error;
  };
  std::vector<Job> jobs;
  std::vector<std::string> stems(a.audio.size());
  std::vector<size_t> utt_counts(a.audio.size(), 0);
  for (size_t f = 0; f < a.audio.size(); ++f) {
    fs::path in(a.audio[f]);
    stems[f] = in.stem().string();
    voxkit::AudioBuffer audio = load_audio(in, a.rate);
    std::vector<voxkit::Utterance> utts;
    if (a.no_split) {
      utts.push_back(voxkit::Utterance{audio, 0.0, audio.duration()});
    } else {
      voxkit::SplitOptions sopt;
      sopt.silence_db = a.silence_db;
      sopt.min_silence = a.min_silence;
      sopt.min_utterance = a.min_utterance;
      utts = voxkit::split_utterances(audio, sopt);
    }
    utt_counts[f] = utts.size();
    for (size_t u = 0; u < utts.size(); ++u)
      jobs.push_back(Job{f, u, std::move(utts[u].buffer), "", {}, ""});
  }

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      Job& job = jobs[i];
      try {
        voxkit::FeatureMatrix feats = voxkit::compute_mfcc(job.buffer, fc, fb);
        if (a.dump_features) {
          fs::path fp = fs::path(a.out_dir) /
                        (stems[job.file_index] + ".utt" +
                         std::to_string(job.utt_index) + ".feats");
          std::ofstream os(fp);
          voxkit::write_features(feats, os);
        }
        job.lattice = voxkit::viterbi_decode(feats, graph, models, dopt);
        voxkit::Transcript tr = voxkit::lattice_best_path(job.lattice);
        job.text = voxkit::join(tr.words, " ");
      } catch (const std::exception& e) {
        job.error = e.what();
      }
    }
  };
  int nworkers = std::max(1, a.workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < nworkers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& job : jobs)
    if (!job.error.empty())
      throw voxkit::Error("file " + a.audio[job.file_index] + " utterance " +
                          std::to_string(job.utt_index) + ": " + job.error);

  for (size_t f = 0; f < a.audio.size(); ++f) {
    std::vector<std::string> lines(utt_counts[f]);
    for (const auto& job : jobs) {
      if (job.file_index != f) continue;
      lines[job.utt_index] = job.text;
      if (a.dump_lattice) {
        fs::path lp = fs::path(a.out_dir) /
                      (stems[f] + ".utt" + std::to_string(job.utt_index) + ".lat");
        std::ofstream os(lp);
        voxkit::write_lattice(job.lattice, os);
      }
    }
    fs::path out = fs::path(a.out_dir) / (stems[f] + ".txt");
    std::string text = voxkit::join(lines, "\n");
    voxkit::write_text_file(out.string(), lines.empty() ? "" : text + "\n");
    std::cout << out.string() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string transcript;
  std::vector<std::string> algorithms{"rake", "textrank", "topicrank", "yake",
                                      "tfidf"};
  std::string corpus_dir, stopwords_path, sentiment_lexicon_path, json_path;
  int top = 20;
  bool no_sentiment = false;
};

json keyword_json(const std::vector<voxkit::KeywordResult>& results, int top) {
  json arr = json::array();
  for (const auto& r : results) {
    if (r.rank > top) break;
    arr.push_back({{"phrase", r.phrase},
                   {"score", r.score},
                   {"rank", r.rank},
                   {"algorithm", r.algorithm}});
  }
  return arr;
}

int run_analyze(const AnalyzeArgs& a) {
  std::string text = voxkit::read_text_file(a.transcript);
  std::set<std::string> stopwords = a.stopwords_path.empty()
                                        ? voxkit::english_stopwords()
                                        : voxkit::load_stopwords(a.stopwords_path);
  voxkit::TokenizedDoc doc = voxkit::tokenize(text, stopwords);

  bool want_tfidf = false;
  for (const auto& alg : a.algorithms) want_tfidf |= alg == "tfidf";
  voxkit::TfidfCorpus corpus;
  if (want_tfidf) {
    if (a.corpus_dir.empty())
      throw voxkit::Error("tfidf needs a background corpus (--corpus DIR)");
    std::vector<std::string> texts;
    for (const auto& f : sorted_files(a.corpus_dir, ".txt"))
      texts.push_back(voxkit::read_text_file(f.string()));
    if (texts.empty())
      throw voxkit::Error("background corpus is empty: " + a.corpus_dir);
    corpus = voxkit::TfidfCorpus::from_texts(texts, stopwords);
  }

  json out;
  out["schema_version"] = kSchemaVersion;
  out["transcript"] = a.transcript;
  out["keywords"] = json::object();
  out["elapsed_seconds"] = json::object();

  for (const auto& alg : a.algorithms) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<voxkit::KeywordResult> results;
    if (alg == "rake") results = voxkit::extract_rake(doc);
    else if (alg == "textrank") results = voxkit::extract_textrank(doc);
    else if (alg == "topicrank") results = voxkit::extract_topicrank(doc);
    else if (alg == "yake") results = voxkit::extract_yake(doc);
    else if (alg == "tfidf") results = voxkit::extract_tfidf(doc, corpus);
    else throw voxkit::Error("unknown algorithm: " + alg);
    double elapsed = seconds_since(t0);
    out["keywords"][alg] = keyword_json(results, a.top);
    out["elapsed_seconds"][alg] = elapsed;

    std::cerr << alg << " (" << voxkit::format_fixed(elapsed, 2) << " seconds)\n";
    for (const auto& r : results) {
      if (r.rank > std::min(a.top, 10)) break;
      std::cerr << "  " << r.rank << ". " << r.phrase << " ("
                << voxkit::format_fixed(r.score, 4) << ")\n";
    }
  }

  if (!a.no_sentiment) {
    voxkit::SentimentLexicon lex =
        a.sentiment_lexicon_path.empty()
            ? voxkit::SentimentLexicon::builtin()
            : voxkit::SentimentLexicon::load(a.sentiment_lexicon_path);
    auto t0 = std::chrono::steady_clock::now();
    voxkit::SentimentScore score = voxkit::analyze_sentiment(text, lex);
    double elapsed = seconds_since(t0);
    out["sentiment"] = {
        {"polarity", score.polarity},
        {"subjectivity", score.subjectivity},
        {"label", voxkit::classify(score)},
        {"polarity_display", voxkit::format_polarity(score)},
        {"subjectivity_display", voxkit::format_subjectivity(score)},
        {"matched_terms", score.matched_terms},
        {"elapsed_seconds", elapsed}};
    std::cerr << "Polarity\t" << voxkit::format_polarity(score) << "\n"
              << "Subjectivity\t" << voxkit::format_subjectivity(score) << "\n"
              << "Time\t" << voxkit::format_fixed(elapsed, 2) << " seconds\n";
  }

  std::string serialized = out.dump(2) + "\n";
  if (a.json_path.empty())
    std::cout << serialized;
  else
    voxkit::write_text_file(a.json_path, serialized);
  return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
  std::string ref_path, hyp_path, json_path, html_path;
  bool text_diff = false;
};

int run_evaluate(const EvaluateArgs& a) {
  std::vector<std::string> ref = voxkit::read_lines(a.ref_path);
  std::vector<std::string> hyp = voxkit::read_lines(a.hyp_path);
  while (!ref.empty() && voxkit::trim(ref.back()).empty()) ref.pop_back();
  while (!hyp.empty() && voxkit::trim(hyp.back()).empty()) hyp.pop_back();
  if (ref.size() != hyp.size())
    throw voxkit::Error("line count mismatch: " + a.ref_path + " has " +
                        std::to_string(ref.size()) + ", " + a.hyp_path +
                        " has " + std::to_string(hyp.size()));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (size_t i = 0; i < ref.size(); ++i) pairs.push_back({ref[i], hyp[i]});
  voxkit::EvalReport rep = voxkit::evaluate_pairs(pairs);

  json out;
  out["schema_version"] = kSchemaVersion;
  out["cer"] = rep.cer;
  out["wer"] = rep.wer;
  out["wer_order_independent"] = rep.wer_order_independent;
  out["ref_words"] = rep.ref_words;
  out["ref_chars"] = rep.ref_chars;
  out["substitutions"] = rep.word_counts.substitutions;
  out["insertions"] = rep.word_counts.insertions;
  out["deletions"] = rep.word_counts.deletions;
  out["pairs"] = static_cast<long>(rep.pairs.size());
  std::string serialized = out.dump(2) + "\n";
  if (a.json_path.empty())
    std::cout << serialized;
  else
    voxkit::write_text_file(a.json_path, serialized);

  if (!a.html_path.empty())
    voxkit::write_text_file(a.html_path, voxkit::diff_report_html(rep));
  if (a.text_diff) std::cerr << voxkit::diff_report_text(rep);
  return 0;
}

// ---------------------------------------------------------------------------
// train-lm

struct TrainLmArgs {
  std::string corpus, out_path;
  int order = 3;
  double discount = 0.5;
};

int run_train_lm(const TrainLmArgs& a) {
  std::vector<std::vector<std::string>> sentences = corpus_sentences(a.corpus);
  voxkit::ArpaModel model = voxkit::train_ngram(sentences, a.order, a.discount);
  std::ofstream os(a.out_path);
  if (!os) throw voxkit::IoError("cannot write " + a.out_path);
  voxkit::write_arpa(model, os);
  std::cerr << "trained " << a.order << "-gram model on " << sentences.size()
            << " sentences, " << model.total_entries() << " entries, "
            << "training perplexity "
            << voxkit::format_fixed(voxkit::perplexity(model, sentences), 2)
            << "\n";
  std::cout << a.out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// train-am

struct TrainAmArgs {
  std::string corpus_dir, dict_path, out_path;
  int rate = 16000;
  int components = 4;
  int iterations = 5;
  bool no_cmn = false;
  double frame_length = 0.025, frame_shift = 0.010;
  int num_filters = 26;
};

int run_train_am(const TrainAmArgs& a) {
  voxkit::Lexicon lex =
      voxkit::load_dict(a.dict_path, voxkit::arpabet_phone_set());
  std::vector<fs::path> audio = sorted_files(a.corpus_dir, ".wav");
  for (const auto& p : sorted_files(a.corpus_dir, ".raw")) audio.push_back(p);
  std::sort(audio.begin(), audio.end());
  if (audio.empty())
    throw voxkit::Error("no .wav/.raw files in " + a.corpus_dir);

  voxkit::FrameConfig fc;
  fc.frame_length = a.frame_length;
  fc.frame_shift = a.frame_shift;
  fc.cepstral_mean_norm = !a.no_cmn;
  voxkit::MelFilterbank fb = voxkit::MelFilterbank::make(
      a.num_filters, fc.effective_fft_size(a.rate), a.rate);

  std::vector<voxkit::TrainingUtterance> utts;
  std::set<std::string> used_phones{voxkit::kSilencePhone};
  for (const auto& path : audio) {
    fs::path txt = path;
    txt.replace_extension(".txt");
    if (!fs::exists(txt))
      throw voxkit::Error("missing transcript for " + path.string());
    std::vector<std::string> words =
        voxkit::split_fields(voxkit::to_lower(voxkit::read_text_file(txt.string())));
    if (words.empty())
      throw voxkit::Error("empty transcript: " + txt.string());
    voxkit::TrainingUtterance u;
    u.features = voxkit::compute_mfcc(load_audio(path, a.rate), fc, fb);
    u.phone_chain.push_back(voxkit::kSilencePhone);
    for (const auto& w : words)
      for (const auto& p : lex.lookup(w)[0].phones) u.phone_chain.push_back(p);
    u.phone_chain.push_back(voxkit::kSilencePhone);
    for (const auto& p : u.phone_chain) used_phones.insert(p);
    utts.push_back(std::move(u));
  }

  voxkit::AmTrainOptions opt;
  opt.num_components = a.components;
  opt.realign_iterations = a.iterations;
  voxkit::AmTrainResult result = voxkit::train_acoustic_model(
      utts, {used_phones.begin(), used_phones.end()}, opt);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  voxkit::save_model_set(result.models, a.out_path);
  std::cerr << "trained " << used_phones.size() << " phone models on "
            << utts.size() << " utterances; alignment scores:";
  for (double s : result.alignment_scores)
    std::cerr << ' ' << voxkit::format_fixed(s, 2);
  std::cerr << "\n";
  std::cout << a.out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voxkit: desk-scale speech transcription and text analytics"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read defaults from a configuration file");

  TranscribeArgs ta;
  CLI::App* tr = app.add_subcommand("transcribe", "decode audio files to text");
  tr->add_option("audio", ta.audio, "input .wav/.raw files")->required();
  tr->add_option("--am", ta.am_path, "acoustic model file")->required();
  tr->add_option("--lm", ta.lm_path, "ARPA language model")->required();
  tr->add_option("--dict", ta.dict_path, "phonetic dictionary")->required();
  tr->add_option("--out-dir", ta.out_dir, "output directory");
  tr->add_option("--rate", ta.rate, "expected sample rate (Hz)");
  tr->add_option("--silence-db", ta.silence_db, "silence threshold (dB, relative)");
  tr->add_option("--min-silence", ta.min_silence, "pause length splitting utterances (s)");
  tr->add_option("--min-utterance", ta.min_utterance, "discard shorter utterances (s)");
  tr->add_flag("--no-split", ta.no_split, "decode each file as one utterance");
  tr->add_option("--beam", ta.beam, "pruning beam (natural log)");
  tr->add_option("--acoustic-scale", ta.acoustic_scale, "acoustic score scale");
  tr->add_option("--lattice-beam", ta.lattice_beam, "lattice pruning beam");
  tr->add_flag("--no-silence-loop", ta.no_silence_loop,
               "build the graph without optional silence");
  tr->add_option("--silence-penalty", ta.silence_penalty,
                 "silence insertion penalty (natural log)");
  tr->add_flag("--skip-missing-words", ta.skip_missing_words,
               "drop LM words missing from the lexicon instead of failing");
  tr->add_flag("--no-cmn", ta.no_cmn, "disable cepstral mean normalization");
  tr->add_option("--frame-length", ta.frame_length, "frame length (s)");
  tr->add_option("--frame-shift", ta.frame_shift, "frame shift (s)");
  tr->add_option("--num-filters", ta.num_filters, "mel filterbank size");
  tr->add_flag("--dump-lattice", ta.dump_lattice, "write per-utterance lattices");
  tr->add_flag("--dump-features", ta.dump_features, "write per-utterance features");
  tr->add_option("--dump-graph", ta.dump_graph, "write the decoding graph to a file");
  tr->add_option("--workers", ta.workers, "parallel utterance workers");

  AnalyzeArgs aa;
  CLI::App* an = app.add_subcommand("analyze", "keywords and sentiment from a transcript");
  an->add_option("transcript", aa.transcript, "transcript .txt")->required();
  an->add_option("--algorithms", aa.algorithms,
                 "subset of rake,textrank,topicrank,yake,tfidf")
      ->delimiter(',')
      ->check(CLI::IsMember({"rake", "textrank", "topicrank", "yake", "tfidf"}));
  an->add_option("--corpus", aa.corpus_dir, "background corpus dir for tfidf");
  an->add_option("--stopwords", aa.stopwords_path, "stopword list file");
  an->add_option("--sentiment-lexicon", aa.sentiment_lexicon_path,
                 "sentiment lexicon file");
  an->add_option("--top", aa.top, "keywords per algorithm in the report");
  an->add_flag("--no-sentiment", aa.no_sentiment, "skip the sentiment block");
  an->add_option("--json", aa.json_path, "write the JSON report here instead of stdout");

  EvaluateArgs ea;
  CLI::App* ev = app.add_subcommand("evaluate", "score a hypothesis against a reference");
  ev->add_option("ref", ea.ref_path, "reference transcript")->required();
  ev->add_option("hyp", ea.hyp_path, "hypothesis transcript")->required();
  ev->add_option("--json", ea.json_path, "write metrics JSON here instead of stdout");
  ev->add_option("--html", ea.html_path, "write an HTML diff report");
  ev->add_flag("--text-diff", ea.text_diff, "print a text diff to stderr");

  TrainLmArgs la;
  CLI::App* tl = app.add_subcommand("train-lm", "train an ARPA n-gram model");
  tl->add_option("corpus", la.corpus, "text file or directory of .txt files")
      ->required();
  tl->add_option("--order", la.order, "n-gram order")->check(CLI::PositiveNumber);
  tl->add_option("--discount", la.discount, "absolute discount in (0,1)");
  tl->add_option("--out", la.out_path, "output ARPA path")->required();

  TrainAmArgs ma;
  CLI::App* tm = app.add_subcommand("train-am", "flat-start monophone training");
  tm->add_option("corpus", ma.corpus_dir,
                 "directory of paired audio (.wav/.raw) and .txt transcripts")
      ->required();
  tm->add_option("--dict", ma.dict_path, "phonetic dictionary")->required();
  tm->add_option("--out", ma.out_path, "output model path")->required();
  tm->add_option("--rate", ma.rate, "sample rate (Hz)");
  tm->add_option("--components", ma.components, "GMM components per state");
  tm->add_option("--iterations", ma.iterations, "realignment rounds");
  tm->add_flag("--no-cmn", ma.no_cmn, "disable cepstral mean normalization");
  tm->add_option("--frame-length", ma.frame_length, "frame length (s)");
  tm->add_option("--frame-shift", ma.frame_shift, "frame shift (s)");
  tm->add_option("--num-filters", ma.num_filters, "mel filterbank size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (tr->parsed()) return run_transcribe(ta);
    if (an->parsed()) return run_analyze(aa);
    if (ev->parsed()) return run_evaluate(ea);
    if (tl->parsed()) return run_train_lm(la);
    if (tm->parsed()) return run_train_am(ma);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return 0;
}
