// SPDX-License-Identifier: Apache-2.0
#include "middleware/fixtures/fixtures.hpp"

namespace mw::fixtures {

const std::string& kb_triples_tsv() {
    static const std::string text = R"kb(# subject	relation	object
London	type	location.citytown
London	location.location.containedby	United Kingdom
Cincinnati	type	location.citytown
Cincinnati	location.location.containedby	United States
Knoxville	type	location.citytown
Knoxville	location.location.containedby	United States
San Carlos	type	location.citytown
San Carlos	location.location.containedby	United States
Sacramento	type	location.citytown
Sacramento	location.location.containedby	United States
Los Angeles	type	location.citytown
Los Angeles	location.location.containedby	United States
Halifax	type	location.citytown
Halifax	location.location.containedby	Canada
Concord	type	location.citytown
Concord	location.location.containedby	United States
Boston	type	location.citytown
Boston	location.location.containedby	United States
Cork	type	location.citytown
Cork	location.location.containedby	Ireland
New York City	type	location.citytown
New York City	location.location.containedby	United States
Perth	type	location.citytown
Perth	location.location.containedby	Australia
Dalby	type	location.citytown
Dalby	location.location.containedby	Australia
Shawnee	type	location.citytown
Shawnee	location.location.containedby	United States
Zanzibar	type	location.citytown
Zanzibar	location.location.containedby	Tanzania
Hampton	type	location.citytown
Hampton	location.location.containedby	United Kingdom
King's Lynn	type	location.citytown
King's Lynn	location.location.containedby	United Kingdom
Leicester	type	location.citytown
Leicester	location.location.containedby	United Kingdom
Halle	type	location.citytown
Halle	location.location.containedby	Germany
Honolulu	type	location.citytown
Honolulu	location.location.containedby	United States
Chicago	type	location.citytown
Chicago	location.location.containedby	United States
Burbank	type	location.citytown
Burbank	location.location.containedby	United States
Englewood	type	location.citytown
Englewood	location.location.containedby	United States
Uvalde	type	location.citytown
Uvalde	location.location.containedby	United States
Christopher Nolan	type	film.director
Steven Spielberg	type	film.director
Quentin Tarantino	type	film.director
Kathryn Bigelow	type	film.director
Greta Gerwig	type	film.director
Washington	type	location.citytown
Washington	location.location.containedby	United States
Anne Hathaway	type	film.actor
Brad Pitt	type	film.actor
Brad Pitt	people.person.birth_year	#num#1963
Brad Pitt	people.person.place_of_birth	Shawnee
Christian Bale	type	film.actor
Cillian Murphy	type	film.actor
Cillian Murphy	people.person.birth_year	#num#1976
Cillian Murphy	people.person.place_of_birth	Cork
Daniel Day-Lewis	type	film.actor
Elliot Page	type	film.actor
Elliot Page	people.person.birth_year	#num#1987
Elliot Page	people.person.place_of_birth	Halifax
Emily Blunt	type	film.actor
Emily Blunt	people.person.birth_year	#num#1983
Emily Blunt	people.person.place_of_birth	London
Emma Watson	type	film.actor
Guy Pearce	type	film.actor
Harry Styles	type	film.actor
Heath Ledger	type	film.actor
Heath Ledger	people.person.birth_year	#num#1979
Heath Ledger	people.person.place_of_birth	Perth
Jamie Foxx	type	film.actor
Jeremy Renner	type	film.actor
Jessica Chastain	type	film.actor
John Travolta	type	film.actor
John Travolta	people.person.birth_year	#num#1954
John Travolta	people.person.place_of_birth	Englewood
Keanu Reeves	type	film.actor
Laura Dern	type	film.actor
Leonardo DiCaprio	type	film.actor
Leonardo DiCaprio	people.person.birth_year	#num#1974
Leonardo DiCaprio	people.person.place_of_birth	Los Angeles
Margot Robbie	type	film.actor
Margot Robbie	people.person.birth_year	#num#1990
Margot Robbie	people.person.place_of_birth	Dalby
Matt Damon	type	film.actor
Matt Damon	people.person.birth_year	#num#1970
Matt Damon	people.person.place_of_birth	Boston
Matthew McConaughey	type	film.actor
Matthew McConaughey	people.person.birth_year	#num#1969
Matthew McConaughey	people.person.place_of_birth	Uvalde
Patrick Swayze	type	film.actor
Roy Scheider	type	film.actor
Ryan Gosling	type	film.actor
Sam Neill	type	film.actor
Samuel L. Jackson	type	film.actor
Samuel L. Jackson	people.person.birth_year	#num#1948
Samuel L. Jackson	people.person.place_of_birth	Washington
Saoirse Ronan	type	film.actor
Saoirse Ronan	people.person.birth_year	#num#1994
Saoirse Ronan	people.person.place_of_birth	New York City
Timothee Chalamet	type	film.actor
Tom Hanks	type	film.actor
Tom Hanks	people.person.birth_year	#num#1956
Tom Hanks	people.person.place_of_birth	Concord
Tom Hardy	type	film.actor
Tom Hardy	people.person.birth_year	#num#1977
Tom Hardy	people.person.place_of_birth	London
Uma Thurman	type	film.actor
Uma Thurman	people.person.birth_year	#num#1970
Uma Thurman	people.person.place_of_birth	Boston
Action	type	film.film_genre
Comedy	type	film.film_genre
Crime	type	film.film_genre
Drama	type	film.film_genre
Science Fiction	type	film.film_genre
Thriller	type	film.film_genre
War	type	film.film_genre
Western	type	film.film_genre
Inception	type	film.film
Inception	film.film.directed_by	Christopher Nolan
Christopher Nolan	film.director.film	Inception
Inception	film.film.release_year	#num#2010
Inception	film.film.runtime	#num#148
Inception	film.film.genre	Science Fiction
Science Fiction	film.film_genre.films_in_this_genre	Inception
Inception	film.film.starring	Leonardo DiCaprio
Leonardo DiCaprio	film.actor.film	Inception
Inception	film.film.starring	Tom Hardy
Tom Hardy	film.actor.film	Inception
Inception	film.film.starring	Elliot Page
Elliot Page	film.actor.film	Inception
The Dark Knight	type	film.film
The Dark Knight	film.film.directed_by	Christopher Nolan
Christopher Nolan	film.director.film	The Dark Knight
The Dark Knight	film.film.release_year	#num#2008
The Dark Knight	film.film.runtime	#num#152
The Dark Knight	film.film.genre	Action
Action	film.film_genre.films_in_this_genre	The Dark Knight
The Dark Knight	film.film.starring	Christian Bale
Christian Bale	film.actor.film	The Dark Knight
The Dark Knight	film.film.starring	Heath Ledger
Heath Ledger	film.actor.film	The Dark Knight
Interstellar	type	film.film
Interstellar	film.film.directed_by	Christopher Nolan
Christopher Nolan	film.director.film	Interstellar
Interstellar	film.film.release_year	#num#2014
Interstellar	film.film.runtime	#num#169
Interstellar	film.film.genre	Science Fiction
Science Fiction	film.film_genre.films_in_this_genre	Interstellar
Interstellar	film.film.starring	Matthew McConaughey
Matthew McConaughey	film.actor.film	Interstellar
Interstellar	film.film.starring	Anne Hathaway
Anne Hathaway	film.actor.film	Interstellar
Dunkirk	type	film.film
Dunkirk	film.film.directed_by	Christopher Nolan
Christopher Nolan	film.director.film	Dunkirk
Dunkirk	film.film.release_year	#num#2017
Dunkirk	film.film.runtime	#num#106
Dunkirk	film.film.genre	War
War	film.film_genre.films_in_this_genre	Dunkirk
Dunkirk	film.film.starring	Tom Hardy
Tom Hardy	film.actor.film	Dunkirk
Dunkirk	film.film.starring	Harry Styles
Harry Styles	film.actor.film	Dunkirk
Memento	type	film.film
Memento	film.film.directed_by	Christopher Nolan
Christopher Nolan	film.director.film	Memento
Memento	film.film.release_year	#num#2000
Memento	film.film.runtime	#num#113
Memento	film.film.genre	Thriller
Thriller	film.film_genre.films_in_this_genre	Memento
Memento	film.film.starring	Guy Pearce
Guy Pearce	film.actor.film	Memento
Oppenheimer	type	film.film
Oppenheimer	film.film.directed_by	Christopher Nolan
Christopher Nolan	film.director.film	Oppenheimer
Oppenheimer	film.film.release_year	#num#2023
Oppenheimer	film.film.runtime	#num#180
Oppenheimer	film.film.genre	Drama
Drama	film.film_genre.films_in_this_genre	Oppenheimer
Oppenheimer	film.film.starring	Cillian Murphy
Cillian Murphy	film.actor.film	Oppenheimer
Oppenheimer	film.film.starring	Emily Blunt
Emily Blunt	film.actor.film	Oppenheimer
Jaws	type	film.film
Jaws	film.film.directed_by	Steven Spielberg
Steven Spielberg	film.director.film	Jaws
Jaws	film.film.release_year	#num#1975
Jaws	film.film.runtime	#num#124
Jaws	film.film.genre	Thriller
Thriller	film.film_genre.films_in_this_genre	Jaws
Jaws	film.film.starring	Roy Scheider
Roy Scheider	film.actor.film	Jaws
Jurassic Park	type	film.film
Jurassic Park	film.film.directed_by	Steven Spielberg
Steven Spielberg	film.director.film	Jurassic Park
Jurassic Park	film.film.release_year	#num#1993
Jurassic Park	film.film.runtime	#num#127
Jurassic Park	film.film.genre	Science Fiction
Science Fiction	film.film_genre.films_in_this_genre	Jurassic Park
Jurassic Park	film.film.starring	Sam Neill
Sam Neill	film.actor.film	Jurassic Park
Jurassic Park	film.film.starring	Laura Dern
Laura Dern	film.actor.film	Jurassic Park
Saving Private Ryan	type	film.film
Saving Private Ryan	film.film.directed_by	Steven Spielberg
Steven Spielberg	film.director.film	Saving Private Ryan
Saving Private Ryan	film.film.release_year	#num#1998
Saving Private Ryan	film.film.runtime	#num#169
Saving Private Ryan	film.film.genre	War
War	film.film_genre.films_in_this_genre	Saving Private Ryan
Saving Private Ryan	film.film.starring	Tom Hanks
Tom Hanks	film.actor.film	Saving Private Ryan
Saving Private Ryan	film.film.starring	Matt Damon
Matt Damon	film.actor.film	Saving Private Ryan
Catch Me If You Can	type	film.film
Catch Me If You Can	film.film.directed_by	Steven Spielberg
Steven Spielberg	film.director.film	Catch Me If You Can
Catch Me If You Can	film.film.release_year	#num#2002
Catch Me If You Can	film.film.runtime	#num#141
Catch Me If You Can	film.film.genre	Drama
Drama	film.film_genre.films_in_this_genre	Catch Me If You Can
Catch Me If You Can	film.film.starring	Leonardo DiCaprio
Leonardo DiCaprio	film.actor.film	Catch Me If You Can
Catch Me If You Can	film.film.starring	Tom Hanks
Tom Hanks	film.actor.film	Catch Me If You Can
Lincoln	type	film.film
Lincoln	film.film.directed_by	Steven Spielberg
Steven Spielberg	film.director.film	Lincoln
Lincoln	film.film.release_year	#num#2012
Lincoln	film.film.runtime	#num#150
Lincoln	film.film.genre	Drama
Drama	film.film_genre.films_in_this_genre	Lincoln
Lincoln	film.film.starring	Daniel Day-Lewis
Daniel Day-Lewis	film.actor.film	Lincoln
Pulp Fiction	type	film.film
Pulp Fiction	film.film.directed_by	Quentin Tarantino
Quentin Tarantino	film.director.film	Pulp Fiction
Pulp Fiction	film.film.release_year	#num#1994
Pulp Fiction	film.film.runtime	#num#154
Pulp Fiction	film.film.genre	Crime
Crime	film.film_genre.films_in_this_genre	Pulp Fiction
Pulp Fiction	film.film.starring	John Travolta
John Travolta	film.actor.film	Pulp Fiction
Pulp Fiction	film.film.starring	Uma Thurman
Uma Thurman	film.actor.film	Pulp Fiction
Pulp Fiction	film.film.starring	Samuel L. Jackson
Samuel L. Jackson	film.actor.film	Pulp Fiction
Kill Bill Volume 1	type	film.film
Kill Bill Volume 1	film.film.directed_by	Quentin Tarantino
Quentin Tarantino	film.director.film	Kill Bill Volume 1
Kill Bill Volume 1	film.film.release_year	#num#2003
Kill Bill Volume 1	film.film.runtime	#num#111
Kill Bill Volume 1	film.film.genre	Action
Action	film.film_genre.films_in_this_genre	Kill Bill Volume 1
Kill Bill Volume 1	film.film.starring	Uma Thurman
Uma Thurman	film.actor.film	Kill Bill Volume 1
Django Unchained	type	film.film
Django Unchained	film.film.directed_by	Quentin Tarantino
Quentin Tarantino	film.director.film	Django Unchained
Django Unchained	film.film.release_year	#num#2012
Django Unchained	film.film.runtime	#num#165
Django Unchained	film.film.genre	Western
Western	film.film_genre.films_in_this_genre	Django Unchained
Django Unchained	film.film.starring	Jamie Foxx
Jamie Foxx	film.actor.film	Django Unchained
Django Unchained	film.film.starring	Leonardo DiCaprio
Leonardo DiCaprio	film.actor.film	Django Unchained
Django Unchained	film.film.starring	Samuel L. Jackson
Samuel L. Jackson	film.actor.film	Django Unchained
Once Upon a Time in Hollywood	type	film.film
Once Upon a Time in Hollywood	film.film.directed_by	Quentin Tarantino
Quentin Tarantino	film.director.film	Once Upon a Time in Hollywood
Once Upon a Time in Hollywood	film.film.release_year	#num#2019
Once Upon a Time in Hollywood	film.film.runtime	#num#161
Once Upon a Time in Hollywood	film.film.genre	Drama
Drama	film.film_genre.films_in_this_genre	Once Upon a Time in Hollywood
Once Upon a Time in Hollywood	film.film.starring	Leonardo DiCaprio
Leonardo DiCaprio	film.actor.film	Once Upon a Time in Hollywood
Once Upon a Time in Hollywood	film.film.starring	Brad Pitt
Brad Pitt	film.actor.film	Once Upon a Time in Hollywood
Inglourious Basterds	type	film.film
Inglourious Basterds	film.film.directed_by	Quentin Tarantino
Quentin Tarantino	film.director.film	Inglourious Basterds
Inglourious Basterds	film.film.release_year	#num#2009
Inglourious Basterds	film.film.runtime	#num#153
Inglourious Basterds	film.film.genre	War
War	film.film_genre.films_in_this_genre	Inglourious Basterds
Inglourious Basterds	film.film.starring	Brad Pitt
Brad Pitt	film.actor.film	Inglourious Basterds
The Hurt Locker	type	film.film
The Hurt Locker	film.film.directed_by	Kathryn Bigelow
Kathryn Bigelow	film.director.film	The Hurt Locker
The Hurt Locker	film.film.release_year	#num#2008
The Hurt Locker	film.film.runtime	#num#131
The Hurt Locker	film.film.genre	War
War	film.film_genre.films_in_this_genre	The Hurt Locker
The Hurt Locker	film.film.starring	Jeremy Renner
Jeremy Renner	film.actor.film	The Hurt Locker
Zero Dark Thirty	type	film.film
Zero Dark Thirty	film.film.directed_by	Kathryn Bigelow
Kathryn Bigelow	film.director.film	Zero Dark Thirty
Zero Dark Thirty	film.film.release_year	#num#2012
Zero Dark Thirty	film.film.runtime	#num#157
Zero Dark Thirty	film.film.genre	Thriller
Thriller	film.film_genre.films_in_this_genre	Zero Dark Thirty
Zero Dark Thirty	film.film.starring	Jessica Chastain
Jessica Chastain	film.actor.film	Zero Dark Thirty
Point Break	type	film.film
Point Break	film.film.directed_by	Kathryn Bigelow
Kathryn Bigelow	film.director.film	Point Break
Point Break	film.film.release_year	#num#1991
Point Break	film.film.runtime	#num#122
Point Break	film.film.genre	Action
Action	film.film_genre.films_in_this_genre	Point Break
Point Break	film.film.starring	Keanu Reeves
Keanu Reeves	film.actor.film	Point Break
Point Break	film.film.starring	Patrick Swayze
Patrick Swayze	film.actor.film	Point Break
Lady Bird	type	film.film
Lady Bird	film.film.directed_by	Greta Gerwig
Greta Gerwig	film.director.film	Lady Bird
Lady Bird	film.film.release_year	#num#2017
Lady Bird	film.film.runtime	#num#94
Lady Bird	film.film.genre	Drama
Drama	film.film_genre.films_in_this_genre	Lady Bird
Lady Bird	film.film.starring	Saoirse Ronan
Saoirse Ronan	film.actor.film	Lady Bird
Little Women	type	film.film
Little Women	film.film.directed_by	Greta Gerwig
Greta Gerwig	film.director.film	Little Women
Little Women	film.film.release_year	#num#2019
Little Women	film.film.runtime	#num#135
Little Women	film.film.genre	Drama
Drama	film.film_genre.films_in_this_genre	Little Women
Little Women	film.film.starring	Saoirse Ronan
Saoirse Ronan	film.actor.film	Little Women
Little Women	film.film.starring	Emma Watson
Emma Watson	film.actor.film	Little Women
Little Women	film.film.starring	Timothee Chalamet
Timothee Chalamet	film.actor.film	Little Women
Barbie	type	film.film
Barbie	film.film.directed_by	Greta Gerwig
Greta Gerwig	film.director.film	Barbie
Barbie	film.film.release_year	#num#2023
Barbie	film.film.runtime	#num#114
Barbie	film.film.genre	Comedy
Comedy	film.film_genre.films_in_this_genre	Barbie
Barbie	film.film.starring	Margot Robbie
Margot Robbie	film.actor.film	Barbie
Barbie	film.film.starring	Ryan Gosling
Ryan Gosling	film.actor.film	Barbie
The Beatles	type	music.musical_group
John Lennon	type	music.group_member
John Lennon	people.person.birth_year	#num#1940
The Beatles	music.musical_group.member	John Lennon
John Lennon	music.group_member.group	The Beatles
Paul McCartney	type	music.group_member
Paul McCartney	people.person.birth_year	#num#1942
The Beatles	music.musical_group.member	Paul McCartney
Paul McCartney	music.group_member.group	The Beatles
George Harrison	type	music.group_member
George Harrison	people.person.birth_year	#num#1943
The Beatles	music.musical_group.member	George Harrison
George Harrison	music.group_member.group	The Beatles
Ringo Starr	type	music.group_member
Ringo Starr	people.person.birth_year	#num#1940
The Beatles	music.musical_group.member	Ringo Starr
Ringo Starr	music.group_member.group	The Beatles
Queen	type	music.musical_group
Freddie Mercury	type	music.group_member
Freddie Mercury	people.person.birth_year	#num#1946
Freddie Mercury	people.person.place_of_birth	Zanzibar
Queen	music.musical_group.member	Freddie Mercury
Freddie Mercury	music.group_member.group	Queen
Brian May	type	music.group_member
Brian May	people.person.birth_year	#num#1947
Brian May	people.person.place_of_birth	Hampton
Queen	music.musical_group.member	Brian May
Brian May	music.group_member.group	Queen
Roger Taylor	type	music.group_member
Roger Taylor	people.person.birth_year	#num#1949
Roger Taylor	people.person.place_of_birth	King's Lynn
Queen	music.musical_group.member	Roger Taylor
Roger Taylor	music.group_member.group	Queen
John Deacon	type	music.group_member
John Deacon	people.person.birth_year	#num#1951
John Deacon	people.person.place_of_birth	Leicester
Queen	music.musical_group.member	John Deacon
John Deacon	music.group_member.group	Queen
George Frideric Handel	type	music.composer
George Frideric Handel	people.person.birth_year	#num#1685
George Frideric Handel	people.person.place_of_birth	Halle
Abbey Road	type	music.album
Abbey Road	music.album.artist	The Beatles
The Beatles	music.artist.album	Abbey Road
Abbey Road	music.album.release_year	#num#1969
Abbey Road	music.album.track	Come Together
Come Together	music.recording.length	#num#259
Abbey Road	music.album.track	Something
Something	music.recording.length	#num#182
Abbey Road	music.album.track	Here Comes the Sun
Here Comes the Sun	music.recording.length	#num#185
Abbey Road	music.album.track	Octopus's Garden
Octopus's Garden	music.recording.length	#num#171
Revolver	type	music.album
Revolver	music.album.artist	The Beatles
The Beatles	music.artist.album	Revolver
Revolver	music.album.release_year	#num#1966
Revolver	music.album.track	Taxman
Taxman	music.recording.length	#num#159
Revolver	music.album.track	Eleanor Rigby
Eleanor Rigby	music.recording.length	#num#127
Revolver	music.album.track	Yellow Submarine
Yellow Submarine	music.recording.length	#num#160
A Night at the Opera	type	music.album
A Night at the Opera	music.album.artist	Queen
Queen	music.artist.album	A Night at the Opera
A Night at the Opera	music.album.release_year	#num#1975
A Night at the Opera	music.album.track	Death on Two Legs
Death on Two Legs	music.recording.length	#num#223
A Night at the Opera	music.album.track	You're My Best Friend
You're My Best Friend	music.recording.length	#num#172
A Night at the Opera	music.album.track	Love of My Life
Love of My Life	music.recording.length	#num#219
A Night at the Opera	music.album.track	The Prophet's Song
The Prophet's Song	music.recording.length	#num#501
A Night at the Opera	music.album.track	Bohemian Rhapsody
Bohemian Rhapsody	music.recording.length	#num#355
Messiah Dublin Version	type	music.album
Messiah Dublin Version	music.album.artist	George Frideric Handel
George Frideric Handel	music.artist.album	Messiah Dublin Version
Messiah Dublin Version	music.album.release_year	#num#1742
Messiah Dublin Version	music.album.track	Sinfony
Sinfony	music.recording.length	#num#190
Messiah Dublin Version	music.album.track	Comfort Ye My People
Comfort Ye My People	music.recording.length	#num#215
Messiah Dublin Version	music.album.track	Ev'ry Valley Shall Be Exalted
Ev'ry Valley Shall Be Exalted	music.recording.length	#num#208
Messiah Dublin Version	music.album.track	Hallelujah
Hallelujah	music.recording.length	#num#232
Messiah Dublin Version	music.album.track	I Know That My Redeemer Liveth
I Know That My Redeemer Liveth	music.recording.length	#num#389
Barack Obama	type	people.person
Barack Obama	people.person.birth_year	#num#1961
Barack Obama	people.person.place_of_birth	Honolulu
Michelle Obama	type	people.person
Michelle Obama	people.person.birth_year	#num#1964
Michelle Obama	people.person.place_of_birth	Chicago
Malia Obama	type	people.person
Malia Obama	people.person.birth_year	#num#1998
Malia Obama	people.person.place_of_birth	Chicago
Sasha Obama	type	people.person
Sasha Obama	people.person.birth_year	#num#2001
Sasha Obama	people.person.place_of_birth	Chicago
Barack Obama	people.person.spouse_s	Michelle Obama
Michelle Obama	people.person.spouse_s	Barack Obama
Barack Obama	people.person.children	Malia Obama
Barack Obama	people.person.children	Sasha Obama
Michelle Obama	people.person.children	Malia Obama
Michelle Obama	people.person.children	Sasha Obama
Lawyer	type	people.profession
Politician	type	people.profession
Author	type	people.profession
Barack Obama	people.person.profession	Lawyer
Barack Obama	people.person.profession	Politician
Barack Obama	people.person.profession	Author
Michelle Obama	people.person.profession	Lawyer
Michelle Obama	people.person.profession	Author
Columbia University	type	education.university
Columbia University	location.location.containedby	New York City
Harvard Law School	type	education.university
Harvard Law School	location.location.containedby	Cambridge
Occidental College	type	education.university
Occidental College	location.location.containedby	Los Angeles
Princeton University	type	education.university
Princeton University	location.location.containedby	Princeton
Cambridge	type	location.citytown
Cambridge	location.location.containedby	United States
Princeton	type	location.citytown
Princeton	location.location.containedby	United States
Barack Obama	people.person.education	Columbia University
Barack Obama	people.person.education	Harvard Law School
Barack Obama	people.person.education	Occidental College
Michelle Obama	people.person.education	Princeton University
Michelle Obama	people.person.education	Harvard Law School
)kb";
    return text;
}

const std::string& kb_tasks_jsonl() {
    static const std::string text = R"tasks({"id": "kb-none-01", "question": "which films directed by Christopher Nolan star Tom Hardy?", "entities": ["Christopher Nolan", "Tom Hardy"], "category": "None", "gold_answer": {"entities": ["Dunkirk", "Inception"]}, "gold_actions": ["get_relations(Christopher Nolan)", "get_neighbors(Christopher Nolan, film.director.film)", "get_relations(Tom Hardy)", "get_neighbors(Tom Hardy, film.actor.film)", "intersection(#0, #1)", "final_answer(#2)"]}
{"id": "kb-none-02", "question": "which directors made films starring Leonardo DiCaprio?", "entities": ["Leonardo DiCaprio"], "category": "None", "gold_answer": {"entities": ["Christopher Nolan", "Quentin Tarantino", "Steven Spielberg"]}, "gold_actions": ["get_relations(Leonardo DiCaprio)", "get_neighbors(Leonardo DiCaprio, film.actor.film)", "get_relations(#0)", "get_neighbors(#0, film.film.directed_by)", "final_answer(#1)"]}
{"id": "kb-none-03", "question": "in which countries were the actors of Inception born?", "entities": ["Inception"], "category": "None", "gold_answer": {"entities": ["Canada", "United Kingdom", "United States"]}, "gold_actions": ["get_relations(Inception)", "get_neighbors(Inception, film.film.starring)", "get_relations(#0)", "get_neighbors(#0, people.person.place_of_birth)", "get_relations(#1)", "get_neighbors(#1, location.location.containedby)", "final_answer(#2)"]}
{"id": "kb-none-04", "question": "which war films did Tom Hanks act in?", "entities": ["Tom Hanks", "War"], "category": "None", "gold_answer": {"entities": ["Saving Private Ryan"]}, "gold_actions": ["get_relations(Tom Hanks)", "get_neighbors(Tom Hanks, film.actor.film)", "get_relations(War)", "get_neighbors(War, film.film_genre.films_in_this_genre)", "intersection(#0, #1)", "final_answer(#2)"]}
{"id": "kb-none-05", "question": "who are the children of the spouse of Barack Obama?", "entities": ["Barack Obama"], "category": "None", "gold_answer": {"entities": ["Malia Obama", "Sasha Obama"]}, "gold_actions": ["get_relations(Barack Obama)", "get_neighbors(Barack Obama, people.person.spouse_s)", "get_relations(#0)", "get_neighbors(#0, people.person.children)", "final_answer(#1)"]}
{"id": "kb-none-06", "question": "which school did both Barack Obama and Michelle Obama attend?", "entities": ["Barack Obama", "Michelle Obama"], "category": "None", "gold_answer": {"entities": ["Harvard Law School"]}, "gold_actions": ["get_relations(Barack Obama)", "get_neighbors(Barack Obama, people.person.education)", "get_relations(Michelle Obama)", "get_neighbors(Michelle Obama, people.person.education)", "intersection(#0, #1)", "final_answer(#2)"]}
{"id": "kb-none-07", "question": "who are the members of the band that recorded Abbey Road?", "entities": ["Abbey Road"], "category": "None", "gold_answer": {"entities": ["George Harrison", "John Lennon", "Paul McCartney", "Ringo Starr"]}, "gold_actions": ["get_relations(Abbey Road)", "get_neighbors(Abbey Road, music.album.artist)", "get_relations(#0)", "get_neighbors(#0, music.musical_group.member)", "final_answer(#1)"]}
{"id": "kb-none-08", "question": "where were the members of Queen born?", "entities": ["Queen"], "category": "None", "gold_answer": {"entities": ["Hampton", "King's Lynn", "Leicester", "Zanzibar"]}, "gold_actions": ["get_relations(Queen)", "get_neighbors(Queen, music.musical_group.member)", "get_relations(#0)", "get_neighbors(#0, people.person.place_of_birth)", "final_answer(#1)"]}
{"id": "kb-none-09", "question": "which actors appeared in films by both Quentin Tarantino and Christopher Nolan?", "entities": ["Quentin Tarantino", "Christopher Nolan"], "category": "None", "gold_answer": {"entities": ["Leonardo DiCaprio"]}, "gold_actions": ["get_relations(Quentin Tarantino)", "get_neighbors(Quentin Tarantino, film.director.film)", "get_relations(#0)", "get_neighbors(#0, film.film.starring)", "get_relations(Christopher Nolan)", "get_neighbors(Christopher Nolan, film.director.film)", "get_relations(#2)", "get_neighbors(#2, film.film.starring)", "intersection(#1, #3)", "final_answer(#4)"]}
{"id": "kb-none-10", "question": "what genres are the films starring Uma Thurman?", "entities": ["Uma Thurman"], "category": "None", "gold_answer": {"entities": ["Action", "Crime"]}, "gold_actions": ["get_relations(Uma Thurman)", "get_neighbors(Uma Thurman, film.actor.film)", "get_relations(#0)", "get_neighbors(#0, film.film.genre)", "final_answer(#1)"]}
{"id": "kb-none-11", "question": "who directed the films that Saoirse Ronan starred in?", "entities": ["Saoirse Ronan"], "category": "None", "gold_answer": {"entities": ["Greta Gerwig"]}, "gold_actions": ["get_relations(Saoirse Ronan)", "get_neighbors(Saoirse Ronan, film.actor.film)", "get_relations(#0)", "get_neighbors(#0, film.film.directed_by)", "final_answer(#1)"]}
{"id": "kb-none-12", "question": "which drama films were directed by Greta Gerwig?", "entities": ["Greta Gerwig", "Drama"], "category": "None", "gold_answer": {"entities": ["Lady Bird", "Little Women"]}, "gold_actions": ["get_relations(Greta Gerwig)", "get_neighbors(Greta Gerwig, film.director.film)", "get_relations(Drama)", "get_neighbors(Drama, film.film_genre.films_in_this_genre)", "intersection(#0, #1)", "final_answer(#2)"]}
{"id": "kb-count-01", "question": "how many films has Christopher Nolan directed?", "entities": ["Christopher Nolan"], "category": "Counting", "gold_answer": {"count": 6}, "gold_actions": ["get_relations(Christopher Nolan)", "get_neighbors(Christopher Nolan, film.director.film)", "count(#0)", "final_answer(#0)"]}
{"id": "kb-count-02", "question": "how many actors starred in films directed by Steven Spielberg?", "entities": ["Steven Spielberg"], "category": "Counting", "gold_answer": {"count": 7}, "gold_actions": ["get_relations(Steven Spielberg)", "get_neighbors(Steven Spielberg, film.director.film)", "get_relations(#0)", "get_neighbors(#0, film.film.starring)", "count(#1)", "final_answer(#1)"]}
{"id": "kb-count-03", "question": "how many albums has the band of Paul McCartney released?", "entities": ["Paul McCartney"], "category": "Counting", "gold_answer": {"count": 2}, "gold_actions": ["get_relations(Paul McCartney)", "get_neighbors(Paul McCartney, music.group_member.group)", "get_relations(#0)", "get_neighbors(#0, music.artist.album)", "count(#1)", "final_answer(#1)"]}
{"id": "kb-count-04", "question": "how many tracks are on A Night at the Opera?", "entities": ["A Night at the Opera"], "category": "Counting", "gold_answer": {"count": 5}, "gold_actions": ["get_relations(A Night at the Opera)", "get_neighbors(A Night at the Opera, music.album.track)", "count(#0)", "final_answer(#0)"]}
{"id": "kb-count-05", "question": "how many thriller films did Steven Spielberg direct?", "entities": ["Steven Spielberg", "Thriller"], "category": "Counting", "gold_answer": {"count": 1}, "gold_actions": ["get_relations(Steven Spielberg)", "get_neighbors(Steven Spielberg, film.director.film)", "get_relations(Thriller)", "get_neighbors(Thriller, film.film_genre.films_in_this_genre)", "intersection(#0, #1)", "count(#2)", "final_answer(#2)"]}
{"id": "kb-count-06", "question": "how many films starring Leonardo DiCaprio were directed by Quentin Tarantino?", "entities": ["Leonardo DiCaprio", "Quentin Tarantino"], "category": "Counting", "gold_answer": {"count": 2}, "gold_actions": ["get_relations(Leonardo DiCaprio)", "get_neighbors(Leonardo DiCaprio, film.actor.film)", "get_relations(Quentin Tarantino)", "get_neighbors(Quentin Tarantino, film.director.film)", "intersection(#0, #1)", "count(#2)", "final_answer(#2)"]}
{"id": "kb-super-01", "question": "what is the longest film directed by Christopher Nolan?", "entities": ["Christopher Nolan"], "category": "Superlative", "gold_answer": {"entities": ["Oppenheimer"]}, "gold_actions": ["get_relations(Christopher Nolan)", "get_neighbors(Christopher Nolan, film.director.film)", "get_attributes(#0)", "argmax(#0, film.film.runtime)", "final_answer(#1)"]}
{"id": "kb-super-02", "question": "what is the earliest film by Quentin Tarantino?", "entities": ["Quentin Tarantino"], "category": "Superlative", "gold_answer": {"entities": ["Pulp Fiction"]}, "gold_actions": ["get_relations(Quentin Tarantino)", "get_neighbors(Quentin Tarantino, film.director.film)", "get_attributes(#0)", "argmin(#0, film.film.release_year)", "final_answer(#1)"]}
{"id": "kb-super-03", "question": "who is the youngest member of Queen?", "entities": ["Queen"], "category": "Superlative", "gold_answer": {"entities": ["John Deacon"]}, "gold_actions": ["get_relations(Queen)", "get_neighbors(Queen, music.musical_group.member)", "get_attributes(#0)", "argmax(#0, people.person.birth_year)", "final_answer(#1)"]}
{"id": "kb-super-04", "question": "what is the shortest track on Messiah Dublin Version?", "entities": ["Messiah Dublin Version"], "category": "Superlative", "gold_answer": {"entities": ["Sinfony"]}, "gold_actions": ["get_relations(Messiah Dublin Version)", "get_neighbors(Messiah Dublin Version, music.album.track)", "get_attributes(#0)", "argmin(#0, music.recording.length)", "final_answer(#1)"]}
{"id": "kb-super-05", "question": "who is the oldest actor in Pulp Fiction?", "entities": ["Pulp Fiction"], "category": "Superlative", "gold_answer": {"entities": ["Samuel L. Jackson"]}, "gold_actions": ["get_relations(Pulp Fiction)", "get_neighbors(Pulp Fiction, film.film.starring)", "get_attributes(#0)", "argmin(#0, people.person.birth_year)", "final_answer(#1)"]}
{"id": "kb-super-06", "question": "what is the most recent film starring Tom Hanks?", "entities": ["Tom Hanks"], "category": "Superlative", "gold_answer": {"entities": ["Catch Me If You Can"]}, "gold_actions": ["get_relations(Tom Hanks)", "get_neighbors(Tom Hanks, film.actor.film)", "get_attributes(#0)", "argmax(#0, film.film.release_year)", "final_answer(#1)"]}
{"id": "kb-super-07", "question": "what is the longest film by the director of The Hurt Locker?", "entities": ["The Hurt Locker"], "category": "Superlative", "gold_answer": {"entities": ["Zero Dark Thirty"]}, "gold_actions": ["get_relations(The Hurt Locker)", "get_neighbors(The Hurt Locker, film.film.directed_by)", "get_relations(#0)", "get_neighbors(#0, film.director.film)", "get_attributes(#1)", "argmax(#1, film.film.runtime)", "final_answer(#2)"]}
)tasks";
    return text;
}

}  // namespace mw::fixtures
