use super::{LexiconFormatError, SourceDocument};
use crate::model::{Article, LexEntry, Lexicon};

/// Reads a lexicon: tab-separated `id`, `preferred_name`, then optional
/// `article`, `property_phrase` and `joiner` columns. Lines starting with
/// `#` are comments. Later rows override earlier rows for the same id.
pub fn load_lexicon(doc: &SourceDocument) -> Result<Lexicon, LexiconFormatError> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(b'\t')
        .has_headers(false)
        .flexible(true)
        .quoting(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(doc.text.as_bytes());

    let mut lexicon = Lexicon::new();
    for record in reader.records() {
        let record = record.map_err(|e| LexiconFormatError::Read {
            path: doc.path.clone(),
            message: e.to_string(),
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if !(2..=5).contains(&record.len()) {
            return Err(LexiconFormatError::ColumnCount {
                path: doc.path.clone(),
                line,
                found: record.len(),
            });
        }
        let optional = |i: usize| record.get(i).filter(|s| !s.is_empty()).map(str::to_string);
        let article_text = record.get(2).unwrap_or("");
        let article = Article::parse(article_text).ok_or_else(|| LexiconFormatError::Article {
            path: doc.path.clone(),
            line,
            article: article_text.to_string(),
        })?;
        let mut entry = LexEntry::new(&record[0], &record[1]).map_err(|_| LexiconFormatError::EmptyName {
            path: doc.path.clone(),
            line,
        })?;
        entry.article = article;
        entry.property_phrase = optional(3);
        entry.joiner = optional(4);
        lexicon.insert(entry);
    }
    Ok(lexicon)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<Lexicon, LexiconFormatError> {
        load_lexicon(&SourceDocument::inline(text))
    }

    #[test]
    fn article_column() {
        let lex = load(":Settlement\tsettlement\ta\n").unwrap();
        let e = lex.get(":Settlement").unwrap();
        assert_eq!(e.preferred_name, "settlement");
        assert_eq!(e.article, Article::A);
    }

    #[test]
    fn empty_article_means_none() {
        let lex = load(":Disease\tdisease\t\n:Graft\tgraft\n").unwrap();
        assert_eq!(lex.get(":Disease").unwrap().article, Article::None);
        assert_eq!(lex.get(":Graft").unwrap().article, Article::None);
    }

    #[test]
    fn property_phrase_row() {
        let lex = load(":hasFindingSite\tfinding site\t\thas a finding site\n").unwrap();
        let e = lex.get(":hasFindingSite").unwrap();
        assert_eq!(e.property_phrase.as_deref(), Some("has a finding site"));
        assert_eq!(e.joiner, None);
    }

    #[test]
    fn comments_blank_lines_and_override() {
        let lex = load("# id\tname\n\n:A\tfirst\n:A\tsecond\tthe\n").unwrap();
        assert_eq!(lex.len(), 1);
        assert_eq!(lex.get(":A").unwrap().preferred_name, "second");
    }

    #[test]
    fn wrong_column_count() {
        let err = load(":A\tok\n:B\n").unwrap_err();
        assert_eq!(
            err,
            LexiconFormatError::ColumnCount {
                path: "<inline>".into(),
                line: 2,
                found: 1
            }
        );
        assert!(load(":A\tb\tc\td\te\tf\n").is_err());
    }

    #[test]
    fn bad_article() {
        assert!(matches!(
            load(":A\tname\tsome\n"),
            Err(LexiconFormatError::Article { .. })
        ));
    }
}
