#include "lyrica/stopwords.hpp"

#include <array>

namespace lyrica {

namespace {

const std::array<LanguageProfile, 10>& profiles() {
  static const std::array<LanguageProfile, 10> kProfiles = {{
      {"en", {"the", "and", "of", "you", "to", "a", "i", "it", "in", "my", "me", "is", "that", "your",
              "on", "we", "for", "be", "all", "so", "with", "but", "this", "what", "when", "are",
              "was", "just", "now", "they", "can", "will", "there", "she", "he", "her", "his", "oh",
              "know", "got", "like", "no", "not", "do", "don", "love", "baby", "yeah"}},
      {"es", {"el", "la", "de", "que", "y", "en", "los", "las", "un", "una", "por", "con", "no",
              "mi", "tu", "te", "me", "se", "lo", "es", "yo", "para", "como", "pero", "más", "mas",
              "del", "al", "si", "sin", "porque", "cuando", "todo", "nada", "amor", "corazón", "estoy",
              "eres", "quiero", "vida"}},
      {"de", {"der", "die", "das", "und", "ich", "du", "nicht", "ist", "ein", "eine", "mit", "zu",
              "es", "wir", "mich", "dich", "mein", "dein", "auf", "den", "dem", "sie", "so", "was",
              "wie", "noch", "nur", "auch", "aber", "wenn", "doch", "kein", "immer", "bin", "bist",
              "hab", "habe", "sein", "uns", "von"}},
      {"fr", {"le", "la", "les", "de", "des", "et", "je", "tu", "il", "elle", "nous", "vous", "que",
              "qui", "un", "une", "est", "pas", "ne", "en", "dans", "pour", "sur", "mon", "ma", "mes",
              "ton", "ta", "moi", "toi", "au", "aux", "du", "ce", "se", "sans", "avec", "plus",
              "comme", "mais", "suis", "j", "c", "l", "qu"}},
      {"it", {"il", "lo", "la", "gli", "le", "di", "che", "e", "non", "un", "una", "per", "con",
              "mi", "ti", "si", "ci", "io", "tu", "sei", "sono", "ma", "come", "del", "della", "nel",
              "nella", "questo", "quando", "anche", "più", "cosa", "tutto", "ancora", "amore",
              "cuore", "perché", "sempre", "solo", "dove"}},
      {"pt", {"o", "a", "os", "as", "de", "do", "da", "dos", "das", "que", "e", "em", "no", "na",
              "um", "uma", "eu", "você", "voce", "não", "nao", "meu", "minha", "seu", "sua", "com",
              "pra", "para", "por", "se", "mais", "mas", "te", "me", "é", "tem", "vai", "quando",
              "coração", "amor", "ela", "ele"}},
      {"nl", {"de", "het", "een", "en", "ik", "je", "jij", "niet", "is", "van", "op", "dat", "die",
              "wat", "we", "wij", "mijn", "jouw", "zijn", "er", "maar", "met", "voor", "als", "nog",
              "wel", "ook", "naar", "om", "hij", "zij", "geen", "nooit", "altijd", "mij", "jou", "dit",
              "daar", "hier", "ben"}},
      {"sv", {"och", "att", "det", "som", "en", "ett", "jag", "du", "är", "inte", "på", "med", "för",
              "av", "den", "till", "har", "min", "mitt", "din", "ditt", "vi", "han", "hon", "men",
              "om", "så", "kan", "vill", "när", "mig", "dig", "bara", "aldrig", "alltid", "här",
              "där", "ska", "var", "från"}},
      {"fi", {"ja", "on", "ei", "se", "että", "minä", "sinä", "hän", "me", "te", "he", "mä", "sä",
              "kun", "niin", "kuin", "mutta", "tai", "jos", "vaan", "olen", "olet", "oli", "ole",
              "mun", "sun", "sen", "tämä", "tää", "mitä", "mikä", "nyt", "vielä", "aina", "koskaan",
              "kanssa", "minun", "sinun", "kaikki", "vain"}},
      {"pl", {"i", "w", "nie", "na", "się", "sie", "z", "że", "ze", "to", "jest", "jak", "do", "mnie",
              "mi", "ty", "ja", "co", "tak", "ale", "o", "już", "juz", "tylko", "czy", "jeszcze", "mój",
              "moj", "twój", "twoj", "tu", "bo", "gdy", "kiedy", "jestem", "jesteś", "by", "ten",
              "ta", "od"}},
  }};
  return kProfiles;
}

}  // namespace

std::span<const LanguageProfile> language_profiles() { return profiles(); }

const std::unordered_set<std::string_view>& english_stopwords() {
  static const std::unordered_set<std::string_view> kWords = {
      "a", "about", "above", "after", "again", "against", "ain", "all", "am", "an", "and", "any",
      "are", "aren", "as", "at", "be", "because", "been", "before", "being", "below", "between",
      "both", "but", "by", "can", "cause", "could", "couldn", "did", "didn", "do", "does", "doesn",
      "doing", "don", "down", "during", "each", "few", "for", "from", "further", "get", "gets",
      "gonna", "got", "gotta", "had", "hadn", "has", "hasn", "have", "haven", "having", "he", "her",
      "here", "hers", "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is",
      "isn", "it", "its", "itself", "just", "let", "ll", "me", "might", "more", "most", "must",
      "my", "myself", "no", "nor", "not", "now", "of", "off", "oh", "on", "once", "only", "or",
      "other", "our", "ours", "ourselves", "out", "over", "own", "re", "same", "shan", "she",
      "should", "shouldn", "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
      "themselves", "then", "there", "these", "they", "this", "those", "through", "till", "to",
      "too", "under", "until", "up", "ve", "very", "wanna", "was", "wasn", "we", "were", "weren",
      "what", "when", "where", "which", "while", "who", "whom", "why", "will", "with", "won",
      "would", "wouldn", "yeah", "you", "your", "yours", "yourself", "yourselves", "ooh", "la",
      "na", "hey", "uh", "whoa", "ya"};
  return kWords;
}

}  // namespace lyrica
