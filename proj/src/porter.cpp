/*
 * Copyright 2026 The morphotrans Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "morphotrans/porter.hpp"

namespace morphotrans {

namespace {

class PorterStemmer
{
public:
  explicit PorterStemmer(std::string_view word) : b_(word) {}

  std::string run()
  {
    if (b_.size() <= 2)
      return b_;
    k_ = static_cast<int>(b_.size()) - 1;
    step1ab();
    if (k_ > 0) {
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    return b_.substr(0, static_cast<std::size_t>(k_) + 1);
  }

private:
  bool cons(int i) const
  {
    switch (b_[static_cast<std::size_t>(i)]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u': return false;
    case 'y': return i == 0 ? true : !cons(i - 1);
    default: return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int m() const
  {
    int n = 0;
    int i = 0;
    for (;;) {
      if (i > j_)
        return n;
      if (!cons(i))
        break;
      ++i;
    }
    ++i;
    for (;;) {
      for (;;) {
        if (i > j_)
          return n;
        if (cons(i))
          break;
        ++i;
      }
      ++i;
      ++n;
      for (;;) {
        if (i > j_)
          return n;
        if (!cons(i))
          break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const
  {
    for (int i = 0; i <= j_; ++i)
      if (!cons(i))
        return true;
    return false;
  }

  bool doublec(int j) const
  {
    if (j < 1)
      return false;
    if (b_[static_cast<std::size_t>(j)] != b_[static_cast<std::size_t>(j) - 1])
      return false;
    return cons(j);
  }

  // consonant-vowel-consonant ending at i, last consonant not w, x or y
  bool cvc(int i) const
  {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2))
      return false;
    const char ch = b_[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s)
  {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1)
      return false;
    if (b_.compare(static_cast<std::size_t>(k_ - len + 1), s.size(), s) != 0)
      return false;
    j_ = k_ - len;
    return true;
  }

  void setto(std::string_view s)
  {
    b_.replace(static_cast<std::size_t>(j_) + 1, static_cast<std::size_t>(k_ - j_), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void r(std::string_view s)
  {
    if (m() > 0)
      setto(s);
  }

  char at(int i) const { return b_[static_cast<std::size_t>(i)]; }

  void step1ab()
  {
    if (at(k_) == 's') {
      if (ends("sses"))
        k_ -= 2;
      else if (ends("ies"))
        setto("i");
      else if (at(k_ - 1) != 's')
        --k_;
    }
    if (ends("eed")) {
      if (m() > 0)
        --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at"))
        setto("ate");
      else if (ends("bl"))
        setto("ble");
      else if (ends("iz"))
        setto("ize");
      else if (doublec(k_)) {
        --k_;
        const char ch = at(k_);
        if (ch == 'l' || ch == 's' || ch == 'z')
          ++k_;
      } else if (j_ = k_, m() == 1 && cvc(k_)) {
        setto("e");
      }
    }
  }

  void step1c()
  {
    if (ends("y") && vowel_in_stem())
      b_[static_cast<std::size_t>(k_)] = 'i';
  }

  void step2()
  {
    if (k_ < 1)
      return;
    switch (at(k_ - 1)) {
    case 'a':
      if (ends("ational")) { r("ate"); break; }
      if (ends("tional")) { r("tion"); break; }
      break;
    case 'c':
      if (ends("enci")) { r("ence"); break; }
      if (ends("anci")) { r("ance"); break; }
      break;
    case 'e':
      if (ends("izer")) { r("ize"); break; }
      break;
    case 'l':
      if (ends("bli")) { r("ble"); break; }
      if (ends("alli")) { r("al"); break; }
      if (ends("entli")) { r("ent"); break; }
      if (ends("eli")) { r("e"); break; }
      if (ends("ousli")) { r("ous"); break; }
      break;
    case 'o':
      if (ends("ization")) { r("ize"); break; }
      if (ends("ation")) { r("ate"); break; }
      if (ends("ator")) { r("ate"); break; }
      break;
    case 's':
      if (ends("alism")) { r("al"); break; }
      if (ends("iveness")) { r("ive"); break; }
      if (ends("fulness")) { r("ful"); break; }
      if (ends("ousness")) { r("ous"); break; }
      break;
    case 't':
      if (ends("aliti")) { r("al"); break; }
      if (ends("iviti")) { r("ive"); break; }
      if (ends("biliti")) { r("ble"); break; }
      break;
    case 'g':
      if (ends("logi")) { r("log"); break; }
      break;
    default: break;
    }
  }

  void step3()
  {
    switch (at(k_)) {
    case 'e':
      if (ends("icate")) { r("ic"); break; }
      if (ends("ative")) { r(""); break; }
      if (ends("alize")) { r("al"); break; }
      break;
    case 'i':
      if (ends("iciti")) { r("ic"); break; }
      break;
    case 'l':
      if (ends("ical")) { r("ic"); break; }
      if (ends("ful")) { r(""); break; }
      break;
    case 's':
      if (ends("ness")) { r(""); break; }
      break;
    default: break;
    }
  }

  void step4()
  {
    if (k_ < 1)
      return;
    switch (at(k_ - 1)) {
    case 'a':
      if (ends("al")) break;
      return;
    case 'c':
      if (ends("ance")) break;
      if (ends("ence")) break;
      return;
    case 'e':
      if (ends("er")) break;
      return;
    case 'i':
      if (ends("ic")) break;
      return;
    case 'l':
      if (ends("able")) break;
      if (ends("ible")) break;
      return;
    case 'n':
      if (ends("ant")) break;
      if (ends("ement")) break;
      if (ends("ment")) break;
      if (ends("ent")) break;
      return;
    case 'o':
      if (ends("ion") && j_ >= 0 && (at(j_) == 's' || at(j_) == 't')) break;
      if (ends("ou")) break;
      return;
    case 's':
      if (ends("ism")) break;
      return;
    case 't':
      if (ends("ate")) break;
      if (ends("iti")) break;
      return;
    case 'u':
      if (ends("ous")) break;
      return;
    case 'v':
      if (ends("ive")) break;
      return;
    case 'z':
      if (ends("ize")) break;
      return;
    default: return;
    }
    if (m() > 1)
      k_ = j_;
  }

  void step5()
  {
    j_ = k_;
    if (at(k_) == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1)))
        --k_;
    }
    if (at(k_) == 'l' && doublec(k_) && m() > 1)
      --k_;
  }

  std::string b_;
  int k_ = 0;
  int j_ = 0;
};

}  // namespace

std::string porter_stem(std::string_view word) { return PorterStemmer(word).run(); }

}  // namespace morphotrans
